#include "polyscribe/fixtures.hpp"

#include "polyscribe/errors.hpp"

namespace polyscribe {

PlanarGraph tetrahedron() {
  return PlanarGraph::from_faces({{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}});
}

PlanarGraph cube() {
  // Vertices: 0..3 bottom ring, 4..7 top ring (i+4 above i).
  return PlanarGraph::from_faces({
      {0, 3, 2, 1},  // bottom (-z)
      {4, 5, 6, 7},  // top (+z)
      {0, 1, 5, 4},  // front (-y)
      {1, 2, 6, 5},  // right (+x)
      {2, 3, 7, 6},  // back (+y)
      {3, 0, 4, 7},  // left (-x)
  });
}

PlanarGraph octahedron() {
  // 0/1 = +-x, 2/3 = +-y, 4/5 = +-z.
  return PlanarGraph::from_faces({
      {0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
      {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5},
  });
}

PlanarGraph icosahedron() {
  // 0 apex, 1..5 upper ring, 6..10 lower ring, 11 bottom.
  return PlanarGraph::from_faces({
      {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
      {1, 6, 2}, {2, 7, 3}, {3, 8, 4}, {4, 9, 5}, {5, 10, 1},
      {2, 6, 7}, {3, 7, 8}, {4, 8, 9}, {5, 9, 10}, {1, 10, 6},
      {11, 7, 6}, {11, 8, 7}, {11, 9, 8}, {11, 10, 9}, {11, 6, 10},
  });
}

PlanarGraph dodecahedron() { return icosahedron().dual(); }

PlanarGraph triangular_prism() {
  return PlanarGraph::from_faces({
      {0, 2, 1}, {3, 4, 5}, {0, 1, 4, 3}, {1, 2, 5, 4}, {2, 0, 3, 5},
  });
}

PlanarGraph square_pyramid() {
  return PlanarGraph::from_faces({
      {0, 3, 2, 1}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4},
  });
}

PlanarGraph truncated_cube_corner() {
  // Cube with the corner at vertex 6 sliced off; 8, 9, 10 sit on the old
  // edges 2-6, 5-6, 7-6.  Steinitz's example of a non-inscribable graph.
  return PlanarGraph::from_faces({
      {0, 3, 2, 1},
      {0, 1, 5, 4},
      {3, 0, 4, 7},
      {4, 5, 9, 10, 7},
      {1, 2, 8, 9, 5},
      {2, 3, 7, 10, 8},
      {10, 9, 8},
  });
}

PlanarGraph fixture(const std::string& name) {
  if (name == "tetrahedron") return tetrahedron();
  if (name == "cube") return cube();
  if (name == "octahedron") return octahedron();
  if (name == "dodecahedron") return dodecahedron();
  if (name == "icosahedron") return icosahedron();
  if (name == "triangular_prism") return triangular_prism();
  if (name == "square_pyramid") return square_pyramid();
  if (name == "truncated_cube_corner") return truncated_cube_corner();
  throw InputError("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  return {"tetrahedron",      "cube",           "octahedron",
          "dodecahedron",     "icosahedron",    "triangular_prism",
          "square_pyramid",   "truncated_cube_corner"};
}

}  // namespace polyscribe
