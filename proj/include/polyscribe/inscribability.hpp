#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyscribe/circuits.hpp"
#include "polyscribe/planar_graph.hpp"
#include "polyscribe/rational.hpp"

namespace polyscribe {

/// Exact rational edge weights (the Rivin kind of weight function).
struct WeightFunction {
  std::map<int, Rational> values;  // edge id -> weight

  const Rational& at(int edge) const;
  static WeightFunction uniform(const PlanarGraph& g, const Rational& w);
};

struct InscribabilityVerdict {
  bool inscribable = false;
  std::optional<WeightFunction> certificate;  // present when the LP is feasible
  std::optional<Rational> slack;              // optimal interior slack t*; absent if LP infeasible
  std::vector<std::string> violated;          // populated when not inscribable
  int circuits_used = 0;
};

struct RivinOptions {
  std::optional<int> max_circuit_length;
  std::int64_t circuit_cap = 1'000'000;
};

/// Decides inscribability: maximizes t subject to
///   w(e) >= t,  w(e) <= 1/2 - t        (every edge)
///   sum_{e at v} w(e) = 1              (every vertex)
///   sum_{e in gamma} w(e) >= 1 + t     (every prismatic circuit gamma)
/// with exact rational arithmetic; inscribable iff t* > 0.  Circuit rows are
/// generated lazily, but the returned optimum is certified against the full
/// circuit list.
InscribabilityVerdict rivin_feasibility(const PlanarGraph& g, const RivinOptions& opt = {});

/// One evaluated inequality/equality of the weight system.
struct ConditionCheck {
  std::string kind;        // "W1-lower", "W1-upper", "W2", "W2-dual", "W3"
  std::vector<int> elements;  // edge ids (W1, W3), or the vertex/dual face id (W2)
  Rational lhs;
  Rational bound;
  bool strict;             // strict inequality required
  bool pass;
};

struct WeightReport {
  std::vector<ConditionCheck> checks;
  bool all_pass = true;
  int failures = 0;
};

/// Evaluates W1/W2/W3 for the given weights with exact arithmetic; the W2
/// vertex sums are cross-checked in the dual formulation (face sums of G*).
WeightReport check_weights(const PlanarGraph& g, const WeightFunction& w, const RivinOptions& opt = {});

}  // namespace polyscribe
