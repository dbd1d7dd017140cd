#include "polyscribe/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "polyscribe/errors.hpp"

namespace polyscribe {

double angle_between(const Vec3& a, const Vec3& b) {
  // atan2 form is stable for nearly parallel and nearly antipodal vectors.
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

std::array<Vec3, 2> tangent_frame(const Vec3& u) {
  // Pick the coordinate axis least aligned with u.
  double ax = std::fabs(u.x), ay = std::fabs(u.y), az = std::fabs(u.z);
  Vec3 axis = (ax <= ay && ax <= az) ? Vec3{1, 0, 0} : (ay <= az ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
  Vec3 t1 = normalized(cross(u, axis));
  Vec3 t2 = cross(u, t1);
  return {t1, t2};
}

double center_distance(const SphericalCircle& a, const SphericalCircle& b) {
  return angle_between(a.normal, b.normal);
}

double circle_intersection_angle(const SphericalCircle& a, const SphericalCircle& b) {
  double sa = std::sqrt(std::max(0.0, 1.0 - a.offset * a.offset));
  double sb = std::sqrt(std::max(0.0, 1.0 - b.offset * b.offset));
  double c = (a.offset * b.offset - dot(a.normal, b.normal)) / (sa * sb);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double tangency_residual(const SphericalCircle& a, const SphericalCircle& b) {
  return std::fabs(center_distance(a, b) - (a.angular_radius() + b.angular_radius()));
}

Vec3 tangency_point(const SphericalCircle& a, const SphericalCircle& b) {
  double gamma = center_distance(a, b);
  double ra = a.angular_radius();
  // Point at geodesic distance ra from a.normal along the arc to b.normal.
  double s = std::sin(gamma);
  if (s < 1e-300) throw InputError("tangency_point: coincident circle centers");
  Vec3 p = a.normal * (std::sin(gamma - ra) / s) + b.normal * (std::sin(ra) / s);
  return normalized(p);
}

std::array<Vec3, 2> circle_intersection_points(const SphericalCircle& a, const SphericalCircle& b) {
  double g = dot(a.normal, b.normal);
  double det = 1.0 - g * g;
  if (det < 1e-14) throw std::domain_error("circle_intersection_points: parallel circle planes");
  double alpha = (a.offset - g * b.offset) / det;
  double beta = (b.offset - g * a.offset) / det;
  Vec3 mid = a.normal * alpha + b.normal * beta;
  double rest = 1.0 - norm2(mid);
  if (rest < -1e-12) throw std::domain_error("circle_intersection_points: circles do not intersect");
  double t = std::sqrt(std::max(0.0, rest) / det);
  Vec3 axis = cross(a.normal, b.normal);
  return {mid + axis * t, mid - axis * t};
}

SphericalCircle circle_through(const Vec3& p1, const Vec3& p2, const Vec3& p3) {
  Vec3 n = cross(p2 - p1, p3 - p1);
  double ln = norm(n);
  if (ln < 1e-300) throw InputError("circle_through: degenerate point triple");
  n = n / ln;
  double d = dot(n, p1);
  Vec3 centroid = (p1 + p2 + p3) / 3.0;
  if (dot(n, centroid) < 0) {  // orient toward the points' side
    n = -n;
    d = -d;
  }
  return {n, d};
}

SphericalCircle fit_circle(const std::vector<Vec3>& points) {
  if (points.size() < 3) throw InputError("fit_circle: need at least 3 points");
  if (points.size() == 3) return circle_through(points[0], points[1], points[2]);
  // Best-fit plane n.x = d in least squares: minimize sum (n.p_i - d)^2 with
  // |n| = 1.  d = n.centroid, and n is the smallest-eigenvalue direction of
  // the 3x3 scatter matrix of centered points (hand-rolled Jacobi sweep).
  Vec3 c{0, 0, 0};
  for (const auto& p : points) c += p;
  c = c / static_cast<double>(points.size());
  double s[3][3] = {};
  for (const auto& p : points) {
    Vec3 q = p - c;
    double v[3] = {q.x, q.y, q.z};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s[i][j] += v[i] * v[j];
  }
  // Jacobi eigenvalue iteration on the symmetric 3x3 matrix.
  double vmat[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = std::fabs(s[0][1]) + std::fabs(s[0][2]) + std::fabs(s[1][2]);
    if (off < 1e-300) break;
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (std::fabs(s[p][q]) < 1e-300) continue;
        double theta = 0.5 * std::atan2(2 * s[p][q], s[q][q] - s[p][p]);
        double co = std::cos(theta), si = std::sin(theta);
        for (int k = 0; k < 3; ++k) {
          double sp = s[p][k], sq = s[q][k];
          s[p][k] = co * sp - si * sq;
          s[q][k] = si * sp + co * sq;
        }
        for (int k = 0; k < 3; ++k) {
          double sp = s[k][p], sq = s[k][q];
          s[k][p] = co * sp - si * sq;
          s[k][q] = si * sp + co * sq;
          double vp = vmat[k][p], vq = vmat[k][q];
          vmat[k][p] = co * vp - si * vq;
          vmat[k][q] = si * vp + co * vq;
        }
      }
  }
  int imin = 0;
  for (int i = 1; i < 3; ++i)
    if (s[i][i] < s[imin][imin]) imin = i;
  Vec3 n{vmat[0][imin], vmat[1][imin], vmat[2][imin]};
  n = normalized(n);
  double d = dot(n, c);
  if (dot(n, c) < 0) {
    n = -n;
    d = -d;
  }
  return {n, d};
}

std::complex<double> stereographic(const Vec3& p) {
  return {p.x / (1.0 - p.z), p.y / (1.0 - p.z)};
}

Vec3 inverse_stereographic(const std::complex<double>& z) {
  double n2 = std::norm(z);
  return Vec3{2 * z.real(), 2 * z.imag(), n2 - 1.0} / (n2 + 1.0);
}

SphericalCircle plane_circle_to_sphere(const std::complex<double>& center, double radius) {
  // Plane circle as A z zbar + Bbar z + B zbar + C = 0 with A = 1,
  // B = -center, C = |center|^2 - r^2; the sphere circle satisfies
  // A = n3 - d, B = n1 + i n2, C = -(n3 + d) up to scale.
  double A = 1.0;
  std::complex<double> B = -center;
  double C = std::norm(center) - radius * radius;
  Vec3 n{B.real(), B.imag(), (A - C) / 2.0};
  double d = -(A + C) / 2.0;
  double s = norm(n);
  n = n / s;
  d = d / s;
  // Cap side = disk interior: test with the disk center.
  Vec3 inside = inverse_stereographic(center);
  if (dot(n, inside) < d) {
    n = -n;
    d = -d;
  }
  return {n, d};
}

// --- Mobius ---

namespace {

using Mat4 = std::array<std::array<double, 4>, 4>;

Mat4 identity4() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      double aik = a[i][k];
      if (aik == 0.0) continue;
      for (int j = 0; j < 4; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

std::array<double, 4> apply4(const Mat4& m, const std::array<double, 4>& v) {
  std::array<double, 4> r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
  return r;
}

// Lorentz inverse: J M^T J with J = diag(1,1,1,-1).
Mat4 lorentz_inverse(const Mat4& m) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double sign = ((i == 3) != (j == 3)) ? -1.0 : 1.0;
      r[i][j] = sign * m[j][i];
    }
  return r;
}

}  // namespace

Mobius::Mobius() : m_(identity4()) {}

Mobius Mobius::rotation(const Vec3& axis, double angle) {
  Vec3 u = normalized(axis);
  double c = std::cos(angle), s = std::sin(angle);
  Mat4 m = identity4();
  double r[3][3] = {
      {c + u.x * u.x * (1 - c), u.x * u.y * (1 - c) - u.z * s, u.x * u.z * (1 - c) + u.y * s},
      {u.y * u.x * (1 - c) + u.z * s, c + u.y * u.y * (1 - c), u.y * u.z * (1 - c) - u.x * s},
      {u.z * u.x * (1 - c) - u.y * s, u.z * u.y * (1 - c) + u.x * s, c + u.z * u.z * (1 - c)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = r[i][j];
  Mobius out;
  out.m_ = m;
  return out;
}

Mobius Mobius::boost_toward(const Vec3& pole, double rapidity) {
  Vec3 u = normalized(pole);
  double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
  Mat4 m = identity4();
  double uu[3] = {u.x, u.y, u.z};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = (i == j ? 1.0 : 0.0) + (ch - 1.0) * uu[i] * uu[j];
    m[i][3] = sh * uu[i];
    m[3][i] = sh * uu[i];
  }
  m[3][3] = ch;
  Mobius out;
  out.m_ = m;
  return out;
}

Mobius Mobius::from_sl2(const std::array<std::complex<double>, 4>& mm) {
  // SL(2,C) acts on Hermitian matrices X -> M X M^H; the Minkowski vector
  // (x,y,z,t) corresponds to X = [[t+z, x+iy],[x-iy, t-z]].
  using C = std::complex<double>;
  const C a = mm[0], b = mm[1], c = mm[2], d = mm[3];
  auto column = [&](double x, double y, double z, double t) {
    C h00(t + z, 0), h01(x, y), h10(x, -y), h11(t - z, 0);
    // M H M^H
    C g00 = a * h00 + b * h10, g01 = a * h01 + b * h11;
    C g10 = c * h00 + d * h10, g11 = c * h01 + d * h11;
    C f00 = g00 * std::conj(a) + g01 * std::conj(b);
    C f01 = g00 * std::conj(c) + g01 * std::conj(d);
    C f11 = g10 * std::conj(c) + g11 * std::conj(d);
    std::array<double, 4> v;
    v[0] = f01.real();
    v[1] = f01.imag();
    v[2] = (f00.real() - f11.real()) / 2.0;
    v[3] = (f00.real() + f11.real()) / 2.0;
    return v;
  };
  std::array<std::array<double, 4>, 4> cols = {column(1, 0, 0, 0), column(0, 1, 0, 0),
                                               column(0, 0, 1, 0), column(0, 0, 0, 1)};
  Mobius out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.m_[i][j] = cols[j][i];
  // Normalize so the transformation has unit "scale": SL(2,C) with det 1
  // already maps to a Lorentz matrix; renormalize against drift anyway.
  double s = out.m_[3][3] > 0 ? 1.0 : -1.0;
  (void)s;
  return out;
}

Mobius Mobius::from_point_pairs(const std::array<Vec3, 3>& src, const std::array<Vec3, 3>& dst) {
  using C = std::complex<double>;
  // Guard: keep all six points away from the projection pole by conjugating
  // with a rotation when needed.
  double closest = 2.0;
  for (const auto& p : {src[0], src[1], src[2], dst[0], dst[1], dst[2]})
    closest = std::min(closest, 1.0 - p.z);
  Mobius pre;  // identity
  if (closest < 1e-3) {
    // Try a handful of candidate poles and take the best-separated one.
    const Vec3 candidates[6] = {{0, 0, 1}, {0, 0, -1}, {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
    Vec3 best{0, 0, -1};
    double best_sep = -1;
    for (const auto& cand : candidates) {
      double sep = 2.0;
      for (const auto& p : {src[0], src[1], src[2], dst[0], dst[1], dst[2]})
        sep = std::min(sep, distance(cand, p));
      if (sep > best_sep) {
        best_sep = sep;
        best = cand;
      }
    }
    // Rotation sending `best` to the north pole.
    Vec3 axis = cross(best, Vec3{0, 0, 1});
    double ang = angle_between(best, Vec3{0, 0, 1});
    if (norm(axis) < 1e-12) axis = Vec3{1, 0, 0};
    pre = Mobius::rotation(axis, -ang);  // moves north pole to `best`
  }
  auto to_c = [&](const Vec3& p) { return stereographic(pre.inverse().apply(p)); };
  C z1 = to_c(src[0]), z2 = to_c(src[1]), z3 = to_c(src[2]);
  C w1 = to_c(dst[0]), w2 = to_c(dst[1]), w3 = to_c(dst[2]);
  // Matrix sending (z1,z2,z3) -> (0,1,inf).
  auto standard = [](C a1, C a2, C a3) {
    return std::array<C, 4>{a2 - a3, -a1 * (a2 - a3), a2 - a1, -a3 * (a2 - a1)};
  };
  auto Z = standard(z1, z2, z3);
  auto W = standard(w1, w2, w3);
  // M = W^{-1} Z, inverse up to scale.
  std::array<C, 4> Winv{W[3], -W[1], -W[2], W[0]};
  std::array<C, 4> M{Winv[0] * Z[0] + Winv[1] * Z[2], Winv[0] * Z[1] + Winv[1] * Z[3],
                     Winv[2] * Z[0] + Winv[3] * Z[2], Winv[2] * Z[1] + Winv[3] * Z[3]};
  C det = M[0] * M[3] - M[1] * M[2];
  if (std::abs(det) < 1e-300) throw InputError("from_point_pairs: degenerate point triple");
  C scale = std::sqrt(det);
  for (auto& e : M) e /= scale;
  Mobius core = Mobius::from_sl2(M);
  return pre * core * pre.inverse();
}

Mobius Mobius::inverse() const {
  Mobius out;
  out.m_ = lorentz_inverse(m_);
  return out;
}

Mobius Mobius::operator*(const Mobius& o) const {
  Mobius out;
  out.m_ = mul(m_, o.m_);
  return out;
}

Vec3 Mobius::apply(const Vec3& p) const {
  auto v = apply4(m_, {p.x, p.y, p.z, 1.0});
  return normalized(Vec3{v[0] / v[3], v[1] / v[3], v[2] / v[3]});
}

SphericalCircle Mobius::apply(const SphericalCircle& c) const {
  double s = std::sqrt(std::max(1e-300, 1.0 - c.offset * c.offset));
  auto v = apply4(m_, {c.normal.x / s, c.normal.y / s, c.normal.z / s, c.offset / s});
  Vec3 n{v[0], v[1], v[2]};
  double ln = norm(n);
  return {n / ln, v[3] / ln};
}

Mobius balancing_mobius(const std::vector<Vec3>& points, double tol, int max_iter) {
  if (points.empty()) return {};
  Mobius total;
  std::vector<Vec3> cur = points;
  for (int it = 0; it < max_iter; ++it) {
    Vec3 m{0, 0, 0};
    for (const auto& p : cur) m += p;
    m = m / static_cast<double>(cur.size());
    double lm = norm(m);
    if (lm <= tol) return total;
    // Push mass away from the centroid direction; damped step.
    double step = std::min(lm, 0.5);
    Mobius b = Mobius::boost_toward(-m / lm, step);
    total = b * total;
    for (auto& p : cur) p = b.apply(p);
  }
  throw ConvergenceError("balancing_mobius: centroid iteration did not converge");
}

}  // namespace polyscribe
