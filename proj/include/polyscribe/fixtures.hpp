#pragma once

#include <string>
#include <vector>

#include "polyscribe/planar_graph.hpp"

namespace polyscribe {

// Built-in polyhedral graphs; face lists are counterclockwise viewed from
// outside.  Names: tetrahedron, cube, octahedron, dodecahedron, icosahedron,
// triangular_prism, square_pyramid, truncated_cube_corner (the cube with one
// corner sliced off, the smallest non-inscribable graph).
PlanarGraph fixture(const std::string& name);

std::vector<std::string> fixture_names();

PlanarGraph tetrahedron();
PlanarGraph cube();
PlanarGraph octahedron();
PlanarGraph dodecahedron();
PlanarGraph icosahedron();
PlanarGraph triangular_prism();
PlanarGraph square_pyramid();
PlanarGraph truncated_cube_corner();

}  // namespace polyscribe
