#include "polyscribe/angles.hpp"

#include <cmath>
#include <numbers>

#include "polyscribe/circuits.hpp"
#include "polyscribe/errors.hpp"

namespace polyscribe {

namespace {
constexpr double kPi = std::numbers::pi;
}

Angle Angle::of_pi(const Rational& multiple) {
  Angle a;
  a.exact_ = true;
  a.multiple_ = multiple;
  a.value_ = to_double(multiple) * kPi;
  return a;
}

Angle Angle::radians(double value) {
  Angle a;
  a.exact_ = false;
  a.multiple_ = 0;
  a.value_ = value;
  return a;
}

AngleWeights AngleWeights::uniform(Target t, int edge_count, const Angle& a) {
  AngleWeights w;
  w.target = t;
  w.values.assign(edge_count, a);
  return w;
}

const Angle& AngleWeights::at(int e) const {
  if (e < 0 || e >= static_cast<int>(values.size()))
    throw InputError("angle weights: missing weight for edge " + std::to_string(e));
  return values[e];
}

namespace {

// A sum of angles that stays exact as long as every summand is exact.
struct AngleSum {
  bool exact = true;
  Rational multiple = 0;  // of pi
  double value = 0;

  void add(const Angle& a) {
    if (!a.exact()) exact = false;
    multiple += a.pi_multiple();
    value += a.value();
  }
  // -1 / 0 / +1 against bound_multiple * pi.
  int compare(const Rational& bound_multiple, double tol) const {
    if (exact) {
      if (multiple < bound_multiple) return -1;
      if (multiple > bound_multiple) return 1;
      return 0;
    }
    double bound = to_double(bound_multiple) * kPi;
    if (value < bound - tol) return -1;
    if (value > bound + tol) return 1;
    return 0;
  }
};

int compare_angle(const Angle& a, const Rational& bound_multiple, double tol) {
  AngleSum s;
  s.add(a);
  return s.compare(bound_multiple, tol);
}

void check_range(const AngleWeights& w, int edge_count, bool zero_allowed, double tol) {
  for (int e = 0; e < edge_count; ++e) {
    const Angle& a = w.at(e);
    int lo = compare_angle(a, Rational(0), tol);
    int hi = compare_angle(a, Rational(1, 2), tol);
    if (hi > 0 || lo < 0 || (!zero_allowed && lo == 0))
      throw InputError("angle weight out of range for this check (edge " + std::to_string(e) +
                       ")");
  }
}

}  // namespace

ConditionReport check_pattern_conditions(const PlanarGraph& gstar, const AngleWeights& w,
                                         const AngleOptions& opt) {
  if (w.target != AngleWeights::Target::Dual)
    throw InputError("check_pattern_conditions: weights must target the dual graph");
  ConditionReport rep;
  check_range(w, gstar.edge_count(), /*zero_allowed=*/true, opt.equality_tol);

  CycleOptions copt;
  copt.max_length = 4;
  for (const auto& c : enumerate_simple_cycles(gstar, copt)) {
    AngleSum sum;
    for (int e : c.edges) sum.add(w.at(e));
    if (c.length() == 3 && sum.compare(Rational(1), opt.equality_tol) >= 0)
      rep.violations.push_back({"loop3", c.edges, sum.value, kPi});
    if (c.length() == 4 && sum.compare(Rational(2), opt.equality_tol) >= 0)
      rep.violations.push_back({"loop4", c.edges, sum.value, 2 * kPi});
  }
  rep.satisfied = rep.violations.empty();
  return rep;
}

namespace {

ConditionReport check_truncated(const TruncatedGraph& trunc, const AngleWeights& w,
                                const AngleOptions& opt, bool hyperideal) {
  if (w.target != AngleWeights::Target::Truncated)
    throw InputError("angle check: weights must target the truncated graph");
  const PlanarGraph& g = trunc.graph;
  ConditionReport rep;
  check_range(w, g.edge_count(), /*zero_allowed=*/hyperideal, opt.equality_tol);

  for (int v = 0; v < g.vertex_count(); ++v) {
    AngleSum sum;
    for (int e : g.vertex_edges(v)) sum.add(w.at(e));
    int cmp = sum.compare(Rational(1), opt.equality_tol);
    if (hyperideal) {
      if (cmp > 0) rep.violations.push_back({"vertex", {v}, sum.value, kPi});
      if (cmp == 0) rep.boundary_equalities.push_back(v);
    } else {
      if (cmp <= 0) rep.violations.push_back({"vertex", {v}, sum.value, kPi});
    }
  }

  CycleOptions copt;
  copt.max_length = 4;
  for (const auto& pc : prismatic_circuits(g, copt)) {
    AngleSum sum;
    for (int e : pc.edges) sum.add(w.at(e));
    if (pc.length() == 3 && sum.compare(Rational(1), opt.equality_tol) >= 0)
      rep.violations.push_back({"prismatic3", pc.edges, sum.value, kPi});
    if (pc.length() == 4 && sum.compare(Rational(2), opt.equality_tol) >= 0)
      rep.violations.push_back({"prismatic4", pc.edges, sum.value, 2 * kPi});
  }
  rep.satisfied = rep.violations.empty();
  return rep;
}

}  // namespace

ConditionReport check_andreev(const TruncatedGraph& trunc, const AngleWeights& w,
                              const AngleOptions& opt) {
  return check_truncated(trunc, w, opt, /*hyperideal=*/false);
}

ConditionReport check_hyperideal(const TruncatedGraph& trunc, const AngleWeights& w,
                                 const AngleOptions& opt) {
  return check_truncated(trunc, w, opt, /*hyperideal=*/true);
}

Angle defect_curvature(const TruncatedGraph& trunc, const AngleWeights& w, int corner_vertex) {
  const PlanarGraph& g = trunc.graph;
  if (corner_vertex < 0 || corner_vertex >= g.vertex_count())
    throw InputError("defect_curvature: no such vertex");
  if (g.degree(corner_vertex) != 3)
    throw InputError("defect_curvature: corner is not trivalent");
  AngleSum sum;
  for (int e : g.vertex_edges(corner_vertex)) sum.add(w.at(e));
  if (sum.exact) return Angle::of_pi(Rational(1) - sum.multiple);
  return Angle::radians(std::numbers::pi - sum.value);
}

}  // namespace polyscribe
