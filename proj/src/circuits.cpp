#include "polyscribe/circuits.hpp"

#include <algorithm>
#include <set>

#include "polyscribe/errors.hpp"

namespace polyscribe {

namespace {

struct Enumerator {
  const PlanarGraph& g;
  const CycleOptions& opt;
  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<int> path_edges;
  std::vector<char> on_path;
  int root = 0;
  int max_len;

  Enumerator(const PlanarGraph& g_, const CycleOptions& opt_)
      : g(g_), opt(opt_), on_path(g_.vertex_count(), 0) {
    max_len = opt.max_length.value_or(g.vertex_count());
  }

  void emit() {
    if (static_cast<std::int64_t>(out.size()) >= opt.cap)
      throw ResourceError("cycle enumeration: cap of " + std::to_string(opt.cap) + " exceeded");
    Cycle c;
    c.vertices = path;
    c.edges = path_edges;
    c.edges.push_back(g.edge_between(path.back(), root));
    out.push_back(std::move(c));
  }

  // Paths start at root, visit only vertices > root, and close back to root;
  // direction is fixed by path[1] < path.back() so each cycle appears once.
  void extend() {
    int v = path.back();
    for (int d : g.vertex_darts(v)) {
      int w = g.head(d);
      if (w == root) {
        if (path.size() >= 3 && path[1] < v) emit();
        continue;
      }
      if (w < root || on_path[w]) continue;
      if (static_cast<int>(path.size()) >= max_len) continue;
      on_path[w] = 1;
      path.push_back(w);
      path_edges.push_back(PlanarGraph::edge_of(d));
      extend();
      path.pop_back();
      path_edges.pop_back();
      on_path[w] = 0;
    }
  }

  void run() {
    for (root = 0; root < g.vertex_count(); ++root) {
      path = {root};
      path_edges.clear();
      on_path.assign(g.vertex_count(), 0);
      on_path[root] = 1;
      extend();
    }
  }
};

}  // namespace

std::vector<Cycle> enumerate_simple_cycles(const PlanarGraph& g, const CycleOptions& opt) {
  Enumerator en(g, opt);
  en.run();
  std::sort(en.out.begin(), en.out.end(), [](const Cycle& a, const Cycle& b) {
    auto ka = a.edges, kb = b.edges;
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka < kb;
  });
  return en.out;
}

std::vector<PrismaticCircuit> prismatic_circuits(const PlanarGraph& g, const CycleOptions& opt) {
  auto rep = validate_polyhedral(g);
  if (!rep.polyhedral()) throw InputError("prismatic_circuits: input graph is not polyhedral");

  PlanarGraph dual = g.dual();
  std::set<std::vector<int>> facial;
  for (int f = 0; f < dual.face_count(); ++f) {
    std::vector<int> edges;
    for (int d : dual.face_darts(f)) edges.push_back(PlanarGraph::edge_of(d));
    std::sort(edges.begin(), edges.end());
    facial.insert(std::move(edges));
  }

  std::vector<PrismaticCircuit> out;
  for (const auto& c : enumerate_simple_cycles(dual, opt)) {
    std::vector<int> sorted = c.edges;
    std::sort(sorted.begin(), sorted.end());
    if (facial.count(sorted)) continue;
    PrismaticCircuit pc;
    pc.edges = std::move(sorted);  // dual edge ids coincide with base edge ids
    pc.dual_cycle = c.vertices;
    out.push_back(std::move(pc));
  }
  return out;
}

}  // namespace polyscribe
