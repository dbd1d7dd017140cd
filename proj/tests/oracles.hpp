#pragma once

// Independent reference implementations used only to cross-check the library:
// subset-based cycle enumeration and basic-solution enumeration for the
// slack LP.  Deliberately brute force.

#include <optional>
#include <vector>

#include "polyscribe/planar_graph.hpp"
#include "polyscribe/rational.hpp"

namespace oracles {

/// Every simple cycle of g, found by testing all edge subsets (2^E); each
/// cycle is returned as a sorted edge-id list, the whole list sorted.
std::vector<std::vector<int>> cycles_by_subsets(const polyscribe::PlanarGraph& g,
                                                std::optional<int> max_length = {});

/// Exact optimum of  max t  s.t.  w >= t, w <= 1/2 - t, vertex sums = 1,
/// circuit sums >= 1 + t, computed by enumerating basic solutions (all
/// choices of tight constraints).  Returns nullopt when infeasible.
std::optional<polyscribe::Rational> slack_lp_by_vertex_enumeration(
    const polyscribe::PlanarGraph& g,
    const std::vector<std::vector<int>>& circuit_edge_sets);

}  // namespace oracles
