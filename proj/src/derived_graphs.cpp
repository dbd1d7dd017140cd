#include "polyscribe/derived_graphs.hpp"

#include <algorithm>

#include "polyscribe/errors.hpp"

namespace polyscribe {

namespace {

void require_polyhedral(const PlanarGraph& g, const char* op) {
  auto rep = validate_polyhedral(g);
  if (!rep.polyhedral()) throw InputError(std::string(op) + ": input graph is not polyhedral");
}

}  // namespace

TruncatedGraph truncate(const PlanarGraph& g) {
  require_polyhedral(g, "truncate");

  // New vertices = darts of g.  Face of the base graph with dart cycle
  // (d_0, d_1, ...) becomes the 2k-gon (d_0, opp(d_0), d_1, opp(d_1), ...);
  // vertex v becomes the cycle of its darts in reverse rotation order.
  std::vector<std::vector<int>> faces;
  faces.reserve(g.face_count() + g.vertex_count());
  for (int f = 0; f < g.face_count(); ++f) {
    std::vector<int> cyc;
    for (int d : g.face_darts(f)) {
      cyc.push_back(d);
      cyc.push_back(PlanarGraph::opposite(d));
    }
    faces.push_back(std::move(cyc));
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> cyc = g.vertex_darts(v);
    std::reverse(cyc.begin() + 1, cyc.end());
    faces.push_back(std::move(cyc));
  }

  TruncatedGraph t;
  t.graph = PlanarGraph::from_faces(faces);
  t.base_vertex_count = g.vertex_count();
  t.base_edge_count = g.edge_count();

  t.edge_is_ordinary.assign(t.graph.edge_count(), false);
  t.ordinary_edge.assign(g.edge_count(), -1);
  t.special_edge_of_dart.assign(g.dart_count(), -1);
  for (int e = 0; e < t.graph.edge_count(); ++e) {
    auto [a, b] = t.graph.edge_endpoints(e);  // a, b are base darts
    if (b == PlanarGraph::opposite(a)) {
      t.edge_is_ordinary[e] = true;
      t.ordinary_edge[PlanarGraph::edge_of(a)] = e;
    } else {
      // Corner edge joining darts a and sigma(a) (or the reverse) at their
      // common tail.
      int corner = (g.next_at_vertex(a) == b) ? a : b;
      t.special_edge_of_dart[corner] = e;
    }
  }

  t.face_is_special.assign(t.graph.face_count(), false);
  t.special_face.assign(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int f = g.face_count() + v;
    t.special_face[v] = f;
    t.face_is_special[f] = true;
  }
  return t;
}

RectifiedGraph rectify(const PlanarGraph& g) {
  require_polyhedral(g, "rectify");

  // Vertices = base edges.  Base face with dart cycle (d_0, d_1, ...) gives
  // the face (edge(d_0), edge(d_1), ...); base vertex v gives the cycle of
  // its incident edges in reverse rotation order.
  std::vector<std::vector<int>> faces;
  faces.reserve(g.face_count() + g.vertex_count());
  for (int f = 0; f < g.face_count(); ++f) {
    std::vector<int> cyc;
    for (int d : g.face_darts(f)) cyc.push_back(PlanarGraph::edge_of(d));
    faces.push_back(std::move(cyc));
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> darts = g.vertex_darts(v);
    std::reverse(darts.begin() + 1, darts.end());
    std::vector<int> cyc;
    for (int d : darts) cyc.push_back(PlanarGraph::edge_of(d));
    faces.push_back(std::move(cyc));
  }

  RectifiedGraph r;
  r.graph = PlanarGraph::from_faces(faces);
  r.base_vertex_count = g.vertex_count();
  r.base_face_count = g.face_count();
  r.face_origin.reserve(r.graph.face_count());
  for (int f = 0; f < g.face_count(); ++f)
    r.face_origin.push_back({RectifiedGraph::Origin::Face, f});
  for (int v = 0; v < g.vertex_count(); ++v)
    r.face_origin.push_back({RectifiedGraph::Origin::Vertex, v});
  return r;
}

}  // namespace polyscribe
