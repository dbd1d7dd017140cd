#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace polyscribe {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3() = default;
  Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline Vec3 normalized(const Vec3& v) { return v / norm(v); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

/// Angle between two unit vectors, robust near 0 and pi.
double angle_between(const Vec3& a, const Vec3& b);

/// Orthonormal tangent frame {t1, t2} at unit vector u (deterministic choice).
std::array<Vec3, 2> tangent_frame(const Vec3& u);

/// Circle on the unit sphere: {x in S^2 : dot(normal, x) = offset}.
/// The associated spherical cap (half-space side) is {x : dot(normal, x) >= offset}.
struct SphericalCircle {
  Vec3 normal;     // unit vector
  double offset;   // in (-1, 1)

  double angular_radius() const { return std::acos(offset); }
};

/// Exterior intersection angle of two spherical circles: 0 for external
/// tangency, pi/2 for orthogonal circles.
double circle_intersection_angle(const SphericalCircle& a, const SphericalCircle& b);

/// Geodesic distance between cap centers.
double center_distance(const SphericalCircle& a, const SphericalCircle& b);

/// |center distance - (r_a + r_b)|; zero at external tangency.
double tangency_residual(const SphericalCircle& a, const SphericalCircle& b);

/// Point of tangency of two externally tangent caps (exact if tangent,
/// otherwise the point on the center geodesic at distance r_a from a's center).
Vec3 tangency_point(const SphericalCircle& a, const SphericalCircle& b);

/// The two intersection points of two overlapping circles. The +/- pair is
/// ordered by the sign of the cross(normal_a, normal_b) component:
/// result[0] = M + t*cross(a.normal, b.normal), result[1] = M - t*cross(...).
/// Throws std::domain_error if the circles do not intersect.
std::array<Vec3, 2> circle_intersection_points(const SphericalCircle& a, const SphericalCircle& b);

/// Circle through three distinct points of S^2.
SphericalCircle circle_through(const Vec3& p1, const Vec3& p2, const Vec3& p3);

/// Least-squares circle through >= 3 approximately coplanar points of S^2.
/// The normal is oriented so that dot(normal, centroid) >= 0.
SphericalCircle fit_circle(const std::vector<Vec3>& points);

// --- stereographic projection (from the north pole (0,0,1)) ---

/// S^2 \ {N} -> C,  (x,y,z) -> (x+iy)/(1-z).
std::complex<double> stereographic(const Vec3& p);

/// C -> S^2,  z -> (2 Re z, 2 Im z, |z|^2 - 1) / (|z|^2 + 1).
Vec3 inverse_stereographic(const std::complex<double>& z);

/// Image of the euclidean plane circle |z - center| = radius on S^2.
/// The cap side corresponds to the disk interior.
SphericalCircle plane_circle_to_sphere(const std::complex<double>& center, double radius);

// --- Moebius transformations ---
//
// Represented as orthochronous Lorentz transformations of R^{3,1} acting on
// S^2 (points = null rays (p,1)) and on circles (unit space-like vectors
// (n,d)/sqrt(1-d^2)).  Orientation of caps is preserved automatically since
// the cap condition dot(p,n) >= d is the Lorentz pairing of (p,1) and (n,d).
class Mobius {
public:
  Mobius();  // identity

  static Mobius rotation(const Vec3& axis, double angle);
  /// Hyperbolic boost attracting points toward the unit direction `pole`.
  static Mobius boost_toward(const Vec3& pole, double rapidity);
  /// From an SL(2,C) matrix acting on stereographic coordinates.
  static Mobius from_sl2(const std::array<std::complex<double>, 4>& m);
  /// Unique Moebius transformation sending src[i] -> dst[i] (distinct triples).
  static Mobius from_point_pairs(const std::array<Vec3, 3>& src, const std::array<Vec3, 3>& dst);

  Mobius inverse() const;
  Mobius operator*(const Mobius& o) const;  // composition: this after o

  Vec3 apply(const Vec3& p) const;
  SphericalCircle apply(const SphericalCircle& c) const;

  const std::array<std::array<double, 4>, 4>& matrix() const { return m_; }

private:
  std::array<std::array<double, 4>, 4> m_;  // row-major Lorentz matrix
};

/// Moebius transformation balancing a point set: after applying, the
/// euclidean centroid of the (unit-sphere) points is within `tol` of the
/// origin.  Deterministic damped iteration; throws ConvergenceError on
/// failure (points concentrated at a single position).
Mobius balancing_mobius(const std::vector<Vec3>& points, double tol = 1e-13, int max_iter = 2000);

}  // namespace polyscribe
