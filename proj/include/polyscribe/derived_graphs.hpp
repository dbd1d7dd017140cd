#pragma once

#include <vector>

#include "polyscribe/planar_graph.hpp"

namespace polyscribe {

/// Skeleton of the truncated polyhedron: every vertex v of the base graph is
/// sliced off and becomes a d(v)-gon "special" face.  The new vertex set is
/// indexed by the base graph's darts: the corner vertex for incidence (v, e)
/// is the dart of e with tail v.
struct TruncatedGraph {
  PlanarGraph graph;
  /// trunc vertex id for base dart d (identity indexing, kept for clarity).
  int corner_vertex(int base_dart) const { return base_dart; }

  std::vector<bool> edge_is_ordinary;      // per trunc edge
  std::vector<int> ordinary_edge;          // base edge -> trunc edge id
  std::vector<int> special_edge_of_dart;   // base dart d -> trunc edge cut at corner d
  std::vector<int> special_face;           // base vertex -> trunc face id
  std::vector<bool> face_is_special;       // per trunc face
  int base_vertex_count = 0;
  int base_edge_count = 0;
};

/// Rectified graph: one vertex per base edge; two edge-vertices are joined
/// when the edges share both a face and a vertex.  Vertex ids equal base
/// edge ids.  Faces list the base faces first, then one face per base vertex.
struct RectifiedGraph {
  PlanarGraph graph;
  enum class Origin { Face, Vertex };
  struct FaceOrigin {
    Origin kind;
    int id;  // base face id or base vertex id
  };
  std::vector<FaceOrigin> face_origin;  // per rectified face
  int base_vertex_count = 0;
  int base_face_count = 0;
};

TruncatedGraph truncate(const PlanarGraph& g);
RectifiedGraph rectify(const PlanarGraph& g);

}  // namespace polyscribe
