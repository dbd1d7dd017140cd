#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyscribe/derived_graphs.hpp"
#include "polyscribe/planar_graph.hpp"
#include "polyscribe/rational.hpp"

namespace polyscribe {

/// An angle that is either an exact rational multiple of pi or a plain
/// floating-point value in radians.  Sums of exact angles compare against
/// multiples of pi without tolerance.
class Angle {
public:
  Angle() : exact_(true), multiple_(0), value_(0) {}
  static Angle of_pi(const Rational& multiple);
  static Angle radians(double value);

  bool exact() const { return exact_; }
  const Rational& pi_multiple() const { return multiple_; }
  double value() const { return value_; }

private:
  bool exact_;
  Rational multiple_;
  double value_;
};

/// Edge weights in angle form, living on the dual graph G* or on the
/// truncated graph's edge set.
struct AngleWeights {
  enum class Target { Dual, Truncated };
  Target target = Target::Dual;
  std::vector<Angle> values;  // indexed by edge id of the target graph

  static AngleWeights uniform(Target t, int edge_count, const Angle& a);
  const Angle& at(int e) const;
};

struct AngleViolation {
  std::string kind;           // "range", "loop3", "loop4", "vertex", "prismatic3", "prismatic4"
  std::vector<int> elements;  // edge ids, or the single vertex id for "vertex"
  double lhs;
  double bound;
};

struct ConditionReport {
  bool satisfied = false;
  std::vector<AngleViolation> violations;
  std::vector<int> boundary_equalities;  // vertices with exact equality (hyperideal check)
};

struct AngleOptions {
  double equality_tol = 1e-12;  // for float-valued angles only
};

/// He-Liu circle pattern conditions on the dual graph: weights in [0, pi/2],
/// every simple closed 3-loop sums below pi and every 4-loop below 2 pi.
ConditionReport check_pattern_conditions(const PlanarGraph& gstar, const AngleWeights& w,
                                         const AngleOptions& opt = {});

/// Andreev's compact-polyhedron conditions on a truncated (trivalent) graph:
/// weights in (0, pi/2]; vertex sums above pi; prismatic 3-circuits below pi;
/// prismatic 4-circuits below 2 pi.
ConditionReport check_andreev(const TruncatedGraph& trunc, const AngleWeights& w,
                              const AngleOptions& opt = {});

/// Hyperideal-polyhedron conditions: like Andreev but weights in [0, pi/2]
/// and vertex sums at most pi; vertices meeting the bound exactly are the
/// ideal (sphere-touching) ones and are listed in boundary_equalities.
ConditionReport check_hyperideal(const TruncatedGraph& trunc, const AngleWeights& w,
                                 const AngleOptions& opt = {});

/// pi minus the sum of the three weights incident to a trivalent corner.
Angle defect_curvature(const TruncatedGraph& trunc, const AngleWeights& w, int corner_vertex);

}  // namespace polyscribe
