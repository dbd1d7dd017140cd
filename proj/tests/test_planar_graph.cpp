#include <doctest.h>

#include "polyscribe/errors.hpp"
#include "polyscribe/fixtures.hpp"
#include "polyscribe/planar_graph.hpp"

using namespace polyscribe;

TEST_CASE("from_faces: platonic counts") {
  auto tet = tetrahedron();
  CHECK(tet.vertex_count() == 4);
  CHECK(tet.edge_count() == 6);
  CHECK(tet.face_count() == 4);

  auto c = cube();
  CHECK(c.vertex_count() == 8);
  CHECK(c.edge_count() == 12);
  CHECK(c.face_count() == 6);

  auto ico = icosahedron();
  CHECK(ico.vertex_count() == 12);
  CHECK(ico.edge_count() == 30);
  CHECK(ico.face_count() == 20);

  auto dod = dodecahedron();
  CHECK(dod.vertex_count() == 20);
  CHECK(dod.edge_count() == 30);
  CHECK(dod.face_count() == 12);
}

TEST_CASE("from_faces: error cases") {
  // Edge (1,2) in three faces.
  CHECK_THROWS_AS(PlanarGraph::from_faces({{0, 1, 2}, {0, 2, 1}, {1, 2, 3}}),
                  InputError);
  // Inconsistent orientation: same directed edge twice.
  CHECK_THROWS_AS(PlanarGraph::from_faces({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 3, 2}}),
                  InputError);
  // Edge in only one face.
  CHECK_THROWS_AS(PlanarGraph::from_faces({{0, 1, 2}, {0, 2, 1, 3}}), InputError);
  // Unused vertex id.
  CHECK_THROWS_AS(PlanarGraph::from_faces({{0, 1, 3}, {0, 3, 1}}), InputError);
  // Loop edge.
  CHECK_THROWS_AS(PlanarGraph::from_faces({{0, 0, 1}, {0, 1, 0}}), InputError);
  // Disconnected input: two disjoint tetrahedra.
  CHECK_THROWS_AS(PlanarGraph::from_faces({{0, 1, 2},
                                           {0, 3, 1},
                                           {0, 2, 3},
                                           {1, 3, 2},
                                           {4, 5, 6},
                                           {4, 7, 5},
                                           {4, 6, 7},
                                           {5, 7, 6}}),
                  InputError);
}

TEST_CASE("from_faces: face lists reproduced up to rotation") {
  std::vector<std::vector<int>> faces = {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                         {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
  auto g = PlanarGraph::from_faces(faces);
  auto out = g.faces_as_vertex_lists();
  REQUIRE(out.size() == faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    auto want = faces[f];
    auto got = out[f];
    REQUIRE(got.size() == want.size());
    // Same cyclic sequence up to rotation.
    auto doubled = want;
    doubled.insert(doubled.end(), want.begin(), want.end());
    bool found = false;
    for (std::size_t s = 0; s < want.size() && !found; ++s)
      found = std::equal(got.begin(), got.end(), doubled.begin() + s);
    CHECK(found);
  }
}

TEST_CASE("round-trip: rebuild from face lists is isomorphic") {
  for (const auto& name : {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"}) {
    auto g = fixture(name);
    auto h = PlanarGraph::from_faces(g.faces_as_vertex_lists());
    CHECK(isomorphic(g, h, false));
  }
}

TEST_CASE("dual: cube <-> octahedron") {
  auto d = cube().dual();
  CHECK(d.vertex_count() == 6);
  CHECK(d.edge_count() == 12);
  CHECK(d.face_count() == 8);
  CHECK(isomorphic(d, octahedron()));
}

TEST_CASE("dual: tetrahedron is self-dual") {
  CHECK(isomorphic(tetrahedron().dual(), tetrahedron()));
}

TEST_CASE("dual: dodecahedron <-> icosahedron, degree histogram") {
  auto d = dodecahedron().dual();
  CHECK(d.vertex_count() == 12);
  CHECK(d.edge_count() == 30);
  CHECK(d.face_count() == 20);
  auto hist = d.face_degree_histogram();
  CHECK(hist.size() == 1);
  CHECK(hist[3] == 20);
  CHECK(isomorphic(d, icosahedron()));
}

TEST_CASE("dual: involution with preserved edge ids") {
  for (const auto& name : {"tetrahedron", "cube", "icosahedron", "triangular_prism"}) {
    auto g = fixture(name);
    auto dd = g.dual().dual();
    CHECK(dd.edge_count() == g.edge_count());
    CHECK(isomorphic(dd, g, false));
    // Edge correspondence: endpoints of edge e in dd are the faces of the
    // dual around edge e, which are this graph's vertices.
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge_endpoints(e);
      auto [x, y] = dd.edge_endpoints(e);
      // dd's vertex ids are renumbered; the unordered degree pair must match.
      CHECK(((dd.degree(x) == g.degree(u) && dd.degree(y) == g.degree(v)) ||
             (dd.degree(x) == g.degree(v) && dd.degree(y) == g.degree(u))));
    }
    // Dual edge e separates the two faces that meet along primal edge e.
    auto dual = g.dual();
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [f1, f2] = g.edge_faces(e);
      auto [a, b] = dual.edge_endpoints(e);
      CHECK(((a == f1 && b == f2) || (a == f2 && b == f1)));
    }
  }
}

TEST_CASE("validate: cube is polyhedral") {
  auto rep = validate_polyhedral(cube());
  CHECK(rep.euler_ok);
  CHECK(rep.simple_ok);
  CHECK(rep.connectivity == 3);
  CHECK(rep.polyhedral());
}

TEST_CASE("validate: path graph rejected") {
  // Path 0-1-2 embedded with a single face walking around it.
  auto g = PlanarGraph::from_faces({{0, 1, 2, 1}});
  auto rep = validate_polyhedral(g);
  CHECK(rep.euler_ok);
  CHECK(rep.connectivity < 3);
  CHECK_FALSE(rep.polyhedral());
}

TEST_CASE("validate: cube with a subdivided edge has connectivity 2") {
  // Subdivide cube edge (0,1) with new vertex 8.
  auto g = PlanarGraph::from_faces({
      {0, 3, 2, 1, 8},
      {4, 5, 6, 7},
      {8, 1, 5, 4, 0},  // front face picks up the subdivision vertex
      {1, 2, 6, 5},
      {2, 3, 7, 6},
      {3, 0, 4, 7},
  });
  auto rep = validate_polyhedral(g);
  CHECK(rep.connectivity == 2);
  CHECK_FALSE(rep.polyhedral());
}

TEST_CASE("degrees and parity") {
  auto c = cube();
  for (int v = 0; v < 8; ++v) CHECK(c.degree(v) == 3);
  CHECK(all_degrees_odd(c));

  auto oct = octahedron();
  for (int v = 0; v < 6; ++v) CHECK(oct.degree(v) == 4);
  CHECK_FALSE(all_degrees_odd(oct));

  CHECK(all_degrees_odd(icosahedron()));

  // Handshake identity.
  for (const auto& name : {"cube", "dodecahedron", "square_pyramid"}) {
    auto g = fixture(name);
    int sum = 0;
    for (int d : degrees(g)) sum += d;
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("rotation order is consistent with faces") {
  auto g = cube();
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int d : g.vertex_darts(v)) {
      CHECK(g.tail(d) == v);
      CHECK(g.tail(g.next_at_vertex(d)) == v);
      CHECK(g.prev_at_vertex(g.next_at_vertex(d)) == d);
    }
  }
}

TEST_CASE("truncated_cube_corner fixture counts") {
  auto g = truncated_cube_corner();
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 15);
  CHECK(g.face_count() == 7);
  CHECK(validate_polyhedral(g).polyhedral());
}
