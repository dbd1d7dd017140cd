#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace polyscribe {

/// A graph embedded in the sphere, stored as a system of darts (directed
/// half-edges).  Edge e owns darts 2e and 2e+1, which are opposites of each
/// other; faces are the orbits of the face-successor permutation.  The
/// vertex rotation is derived: sigma(d) = next_in_face(opposite(d)).
///
/// Every instance is immutable after construction, simple (no loops or
/// parallel edges), connected, and satisfies |V| - |E| + |F| = 2.
class PlanarGraph {
public:
  /// Build from counterclockwise face vertex lists.  Every undirected edge
  /// must appear in exactly two faces with opposite orientations.
  static PlanarGraph from_faces(const std::vector<std::vector<int>>& face_vertex_lists);

  int vertex_count() const { return nv_; }
  int edge_count() const { return static_cast<int>(tail_.size()) / 2; }
  int face_count() const { return nf_; }
  int dart_count() const { return static_cast<int>(tail_.size()); }

  static int opposite(int d) { return d ^ 1; }
  static int edge_of(int d) { return d >> 1; }
  int tail(int d) const { return tail_[d]; }
  int head(int d) const { return tail_[d ^ 1]; }
  int face_of(int d) const { return face_[d]; }
  int next_in_face(int d) const { return fnext_[d]; }
  /// Rotation around tail(d): the next dart with the same tail.
  int next_at_vertex(int d) const { return fnext_[d ^ 1]; }
  int prev_at_vertex(int d) const { return fprev_[d] ^ 1; }

  /// Endpoints (tail(2e), head(2e)) of edge e.
  std::pair<int, int> edge_endpoints(int e) const { return {tail_[2 * e], tail_[2 * e + 1]}; }
  /// The faces on the two sides of edge e: (face_of(2e), face_of(2e+1)).
  std::pair<int, int> edge_faces(int e) const { return {face_[2 * e], face_[2 * e + 1]}; }

  int degree(int v) const { return static_cast<int>(vertex_darts_[v].size()); }
  /// Darts with tail v in rotation order, starting from the smallest dart id.
  const std::vector<int>& vertex_darts(int v) const { return vertex_darts_[v]; }
  /// Edges incident to v in rotation order.
  std::vector<int> vertex_edges(int v) const;
  /// Neighbor vertices of v in rotation order.
  std::vector<int> neighbors(int v) const;
  bool adjacent(int u, int v) const;
  /// Edge id joining u and v, or -1.
  int edge_between(int u, int v) const;

  const std::vector<int>& face_darts(int f) const { return face_darts_[f]; }
  int face_degree(int f) const { return static_cast<int>(face_darts_[f].size()); }
  std::vector<int> face_vertices(int f) const;
  std::vector<std::vector<int>> faces_as_vertex_lists() const;

  /// Dual graph: vertices = faces of this graph, faces = vertices, and edge
  /// ids preserved (dual edge e crosses primal edge e).
  PlanarGraph dual() const;

  /// The mirror-image embedding (all face cycles reversed).
  PlanarGraph mirrored() const;

  /// Sorted (face degree -> count) histogram.
  std::map<int, int> face_degree_histogram() const;
  std::map<int, int> vertex_degree_histogram() const;

  /// Optional per-element string tags.
  std::map<int, std::string> vertex_labels;
  std::map<int, std::string> edge_labels;
  std::map<int, std::string> face_labels;

private:
  friend PlanarGraph make_from_darts(int nv, std::vector<int> tail, std::vector<int> fnext);
  void derive_faces_and_check();

  int nv_ = 0, nf_ = 0;
  std::vector<int> tail_;    // per dart
  std::vector<int> fnext_;   // per dart
  std::vector<int> fprev_;   // per dart
  std::vector<int> face_;    // per dart
  std::vector<std::vector<int>> face_darts_;
  std::vector<std::vector<int>> vertex_darts_;
};

struct ValidationReport {
  bool euler_ok = false;
  bool simple_ok = false;
  int connectivity = 0;  // minimum vertex cut found, capped at 3
  std::vector<std::string> messages;

  bool polyhedral() const { return euler_ok && simple_ok && connectivity >= 3; }
};

/// Euler / simplicity / 3-connectivity report (exhaustive cut search; meant
/// for graphs with at most a few hundred vertices).  Never throws.
ValidationReport validate_polyhedral(const PlanarGraph& g);

std::vector<int> degrees(const PlanarGraph& g);
bool all_degrees_odd(const PlanarGraph& g);

/// Combinatorial-map isomorphism (equivalence of embeddings).  With
/// `allow_reflection` the mirror image is accepted too.  For 3-connected
/// planar graphs this coincides with graph isomorphism (Whitney).
bool isomorphic(const PlanarGraph& a, const PlanarGraph& b, bool allow_reflection = true);

}  // namespace polyscribe
