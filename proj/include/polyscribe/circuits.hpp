#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyscribe/planar_graph.hpp"

namespace polyscribe {

/// A simple cycle, canonicalized: `vertices` starts at the smallest vertex
/// and runs in the direction whose second entry is smaller than the last.
struct Cycle {
  std::vector<int> vertices;
  std::vector<int> edges;  // edges[i] joins vertices[i] and vertices[i+1 mod k]
  int length() const { return static_cast<int>(vertices.size()); }
};

struct CycleOptions {
  std::optional<int> max_length;      // default: unbounded
  std::int64_t cap = 1'000'000;       // resource guard on the cycle count
};

/// All simple cycles of g up to rotation/reflection, each reported once, in
/// deterministic order (lexicographic by sorted edge-id sets).  Throws
/// ResourceError when the count exceeds the cap.
std::vector<Cycle> enumerate_simple_cycles(const PlanarGraph& g, const CycleOptions& opt = {});

/// Edge set of the base graph whose dual edges form a simple non-facial
/// closed curve in the dual graph.
struct PrismaticCircuit {
  std::vector<int> edges;       // base edge ids (== dual edge ids)
  std::vector<int> dual_cycle;  // dual vertex cycle
  int length() const { return static_cast<int>(edges.size()); }
};

/// Prismatic circuits of a polyhedral graph, complete up to
/// opt.max_length, in the deterministic order of enumerate_simple_cycles.
std::vector<PrismaticCircuit> prismatic_circuits(const PlanarGraph& g, const CycleOptions& opt = {});

}  // namespace polyscribe
