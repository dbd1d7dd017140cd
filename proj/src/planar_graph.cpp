#include "polyscribe/planar_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "polyscribe/errors.hpp"

namespace polyscribe {

namespace {

std::string edge_name(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

PlanarGraph PlanarGraph::from_faces(const std::vector<std::vector<int>>& face_vertex_lists) {
  if (face_vertex_lists.empty()) throw InputError("from_faces: no faces");

  int nv = 0;
  for (const auto& f : face_vertex_lists) {
    if (f.size() < 2) throw InputError("from_faces: face with fewer than 2 vertices");
    for (int v : f) {
      if (v < 0) throw InputError("from_faces: negative vertex id");
      nv = std::max(nv, v + 1);
    }
  }

  // First pass: assign edge ids in order of first appearance.
  std::map<std::pair<int, int>, int> edge_id;  // (min,max) -> e
  std::vector<std::pair<int, int>> first_dir;  // e -> first seen direction
  for (const auto& f : face_vertex_lists) {
    int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i) {
      int u = f[i], v = f[(i + 1) % k];
      if (u == v) throw InputError("from_faces: loop edge at vertex " + std::to_string(u));
      auto key = std::minmax(u, v);
      if (edge_id.emplace(key, static_cast<int>(first_dir.size())).second)
        first_dir.emplace_back(u, v);
    }
  }
  int ne = static_cast<int>(first_dir.size());

  PlanarGraph g;
  g.nv_ = nv;
  g.tail_.assign(2 * ne, -1);
  g.fnext_.assign(2 * ne, -1);
  g.face_.assign(2 * ne, -1);
  for (int e = 0; e < ne; ++e) {
    g.tail_[2 * e] = first_dir[e].first;
    g.tail_[2 * e + 1] = first_dir[e].second;
  }

  // Second pass: face orbits; every directed edge must occur exactly once.
  int nf = static_cast<int>(face_vertex_lists.size());
  g.nf_ = nf;
  g.face_darts_.resize(nf);
  for (int fi = 0; fi < nf; ++fi) {
    const auto& f = face_vertex_lists[fi];
    int k = static_cast<int>(f.size());
    std::vector<int> darts(k);
    for (int i = 0; i < k; ++i) {
      int u = f[i], v = f[(i + 1) % k];
      int e = edge_id.at(std::minmax(u, v));
      int d = (first_dir[e] == std::make_pair(u, v)) ? 2 * e : 2 * e + 1;
      if (g.tail_[d] != u)
        throw InputError("from_faces: edge " + edge_name(u, v) +
                         " appears more than twice (non-manifold)");
      if (g.face_[d] != -1)
        throw InputError("from_faces: directed edge " + edge_name(u, v) +
                         " appears twice; faces are not consistently oriented or the edge is non-manifold");
      g.face_[d] = fi;
      darts[i] = d;
    }
    for (int i = 0; i < k; ++i) g.fnext_[darts[i]] = darts[(i + 1) % k];
    g.face_darts_[fi] = std::move(darts);
  }
  for (int d = 0; d < 2 * ne; ++d)
    if (g.face_[d] == -1) {
      int e = d >> 1;
      throw InputError("from_faces: edge " + edge_name(g.tail_[2 * e], g.tail_[2 * e + 1]) +
                       " appears in only one face (non-manifold)");
    }

  g.fprev_.assign(2 * ne, -1);
  for (int d = 0; d < 2 * ne; ++d) g.fprev_[g.fnext_[d]] = d;

  // Vertex rotations must be single cycles, every vertex id used.
  g.vertex_darts_.assign(nv, {});
  std::vector<int> deg(nv, 0);
  for (int d = 0; d < 2 * ne; ++d) deg[g.tail_[d]]++;
  for (int v = 0; v < nv; ++v)
    if (deg[v] == 0) throw InputError("from_faces: vertex id " + std::to_string(v) + " unused");
  {
    std::vector<int> start(nv, -1);
    for (int d = 2 * ne - 1; d >= 0; --d) start[g.tail_[d]] = d;
    for (int v = 0; v < nv; ++v) {
      int d0 = start[v];
      std::vector<int> orbit;
      int d = d0;
      do {
        orbit.push_back(d);
        d = g.fnext_[d ^ 1];  // sigma
        if (static_cast<int>(orbit.size()) > deg[v])
          throw InputError("from_faces: broken rotation at vertex " + std::to_string(v));
      } while (d != d0);
      if (static_cast<int>(orbit.size()) != deg[v])
        throw InputError("from_faces: rotation at vertex " + std::to_string(v) +
                         " splits into several cycles (pinched embedding)");
      g.vertex_darts_[v] = std::move(orbit);
    }
  }

  // Connectivity of the underlying graph.
  {
    std::vector<char> seen(nv, 0);
    std::queue<int> q;
    q.push(g.tail_[0]);
    seen[g.tail_[0]] = 1;
    int cnt = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int d : g.vertex_darts_[v]) {
        int w = g.tail_[d ^ 1];
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          q.push(w);
        }
      }
    }
    if (cnt != nv) throw InputError("from_faces: disconnected input");
  }

  // Sphere embedding.
  if (nv - ne + nf != 2)
    throw InputError("from_faces: Euler characteristic is " + std::to_string(nv - ne + nf) +
                     ", not a sphere embedding");

  return g;
}

// Construct from per-dart tails and face-successor, reusing the validation in
// derive_faces_and_check.  Used by dual().
PlanarGraph make_from_darts(int nv, std::vector<int> tail, std::vector<int> fnext) {
  PlanarGraph g;
  g.nv_ = nv;
  g.tail_ = std::move(tail);
  g.fnext_ = std::move(fnext);
  g.derive_faces_and_check();
  return g;
}

void PlanarGraph::derive_faces_and_check() {
  int nd = static_cast<int>(tail_.size());
  int ne = nd / 2;
  face_.assign(nd, -1);
  face_darts_.clear();
  for (int d0 = 0; d0 < nd; ++d0) {
    if (face_[d0] != -1) continue;
    int f = static_cast<int>(face_darts_.size());
    std::vector<int> orbit;
    int d = d0;
    do {
      face_[d] = f;
      orbit.push_back(d);
      d = fnext_[d];
    } while (d != d0);
    face_darts_.push_back(std::move(orbit));
  }
  nf_ = static_cast<int>(face_darts_.size());

  fprev_.assign(nd, -1);
  for (int d = 0; d < nd; ++d) fprev_[fnext_[d]] = d;

  vertex_darts_.assign(nv_, {});
  std::vector<int> deg(nv_, 0);
  for (int d = 0; d < nd; ++d) deg[tail_[d]]++;
  std::vector<int> start(nv_, -1);
  for (int d = nd - 1; d >= 0; --d) start[tail_[d]] = d;
  for (int v = 0; v < nv_; ++v) {
    if (deg[v] == 0) throw InputError("graph construction: unused vertex id");
    int d0 = start[v];
    std::vector<int> orbit;
    int d = d0;
    do {
      orbit.push_back(d);
      d = fnext_[d ^ 1];
      if (static_cast<int>(orbit.size()) > deg[v])
        throw InputError("graph construction: broken rotation");
    } while (d != d0);
    if (static_cast<int>(orbit.size()) != deg[v])
      throw InputError("graph construction: pinched vertex");
    vertex_darts_[v] = std::move(orbit);
  }

  // Simplicity.
  std::set<std::pair<int, int>> pairs;
  for (int e = 0; e < ne; ++e) {
    int u = tail_[2 * e], v = tail_[2 * e + 1];
    if (u == v) throw InputError("graph construction: loop edge");
    if (!pairs.insert(std::minmax(u, v)).second)
      throw InputError("graph construction: parallel edges");
  }

  if (nv_ - ne + nf_ != 2) throw InputError("graph construction: not a sphere embedding");
}

std::vector<int> PlanarGraph::vertex_edges(int v) const {
  std::vector<int> out;
  out.reserve(vertex_darts_[v].size());
  for (int d : vertex_darts_[v]) out.push_back(d >> 1);
  return out;
}

std::vector<int> PlanarGraph::neighbors(int v) const {
  std::vector<int> out;
  out.reserve(vertex_darts_[v].size());
  for (int d : vertex_darts_[v]) out.push_back(tail_[d ^ 1]);
  return out;
}

bool PlanarGraph::adjacent(int u, int v) const { return edge_between(u, v) >= 0; }

int PlanarGraph::edge_between(int u, int v) const {
  for (int d : vertex_darts_[u])
    if (tail_[d ^ 1] == v) return d >> 1;
  return -1;
}

std::vector<int> PlanarGraph::face_vertices(int f) const {
  std::vector<int> out;
  out.reserve(face_darts_[f].size());
  for (int d : face_darts_[f]) out.push_back(tail_[d]);
  return out;
}

std::vector<std::vector<int>> PlanarGraph::faces_as_vertex_lists() const {
  std::vector<std::vector<int>> out(nf_);
  for (int f = 0; f < nf_; ++f) out[f] = face_vertices(f);
  return out;
}

PlanarGraph PlanarGraph::dual() const {
  // Dual tails are faces; the dual face-successor is the primal vertex
  // rotation sigma, whose orbits become the dual faces (= primal vertices).
  int nd = dart_count();
  std::vector<int> dtail(nd), dnext(nd);
  for (int d = 0; d < nd; ++d) {
    dtail[d] = face_[d];
    dnext[d] = fnext_[d ^ 1];  // sigma(d)
  }
  return make_from_darts(nf_, std::move(dtail), std::move(dnext));
}

PlanarGraph PlanarGraph::mirrored() const {
  auto faces = faces_as_vertex_lists();
  for (auto& f : faces) std::reverse(f.begin(), f.end());
  return from_faces(faces);
}

std::map<int, int> PlanarGraph::face_degree_histogram() const {
  std::map<int, int> h;
  for (int f = 0; f < nf_; ++f) h[face_degree(f)]++;
  return h;
}

std::map<int, int> PlanarGraph::vertex_degree_histogram() const {
  std::map<int, int> h;
  for (int v = 0; v < nv_; ++v) h[degree(v)]++;
  return h;
}

std::vector<int> degrees(const PlanarGraph& g) {
  std::vector<int> d(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  return d;
}

bool all_degrees_odd(const PlanarGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 == 0) return false;
  return true;
}

namespace {

// Is the graph connected after deleting the vertices in `removed`?
bool connected_without(const PlanarGraph& g, const std::vector<char>& removed) {
  int n = g.vertex_count();
  int source = -1;
  int alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      ++alive;
      if (source < 0) source = v;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(source);
  seen[source] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++cnt;
        q.push(w);
      }
    }
  }
  return cnt == alive;
}

}  // namespace

ValidationReport validate_polyhedral(const PlanarGraph& g) {
  ValidationReport r;
  int nv = g.vertex_count(), ne = g.edge_count(), nf = g.face_count();
  r.euler_ok = (nv - ne + nf == 2);

  r.simple_ok = true;  // enforced at construction
  std::set<std::pair<int, int>> pairs;
  for (int e = 0; e < ne; ++e) {
    auto [u, v] = g.edge_endpoints(e);
    if (u == v || !pairs.insert(std::minmax(u, v)).second) r.simple_ok = false;
  }

  std::vector<char> removed(nv, 0);
  if (!connected_without(g, removed)) {
    r.connectivity = 0;
    r.messages.push_back("graph is disconnected");
  } else {
    int conn = 3;
    for (int v = 0; v < nv && conn > 1; ++v) {
      removed.assign(nv, 0);
      removed[v] = 1;
      if (!connected_without(g, removed)) {
        conn = 1;
        r.messages.push_back("cut vertex: " + std::to_string(v));
      }
    }
    if (conn > 1) {
      for (int u = 0; u < nv && conn > 2; ++u)
        for (int v = u + 1; v < nv && conn > 2; ++v) {
          removed.assign(nv, 0);
          removed[u] = removed[v] = 1;
          if (!connected_without(g, removed)) {
            conn = 2;
            r.messages.push_back("2-cut: {" + std::to_string(u) + "," + std::to_string(v) + "}");
          }
        }
    }
    if (nv <= 3) conn = std::min(conn, nv - 1);
    r.connectivity = conn;
  }

  if (!r.euler_ok) r.messages.push_back("Euler identity fails");
  if (!r.simple_ok) r.messages.push_back("graph is not simple");
  if (r.polyhedral()) r.messages.push_back("polyhedral");
  return r;
}

namespace {

// Propagate the dart bijection generated by m(0) = d0 and the permutations
// alpha, phi; returns false on any clash.
bool try_dart_map(const PlanarGraph& a, const PlanarGraph& b, int d0) {
  int nd = a.dart_count();
  std::vector<int> m(nd, -1);
  std::vector<int> stack = {0};
  m[0] = d0;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    const int img = m[d];
    int da = PlanarGraph::opposite(d), ia = PlanarGraph::opposite(img);
    if (m[da] == -1) {
      m[da] = ia;
      stack.push_back(da);
    } else if (m[da] != ia) {
      return false;
    }
    int dn = a.next_in_face(d), in = b.next_in_face(img);
    if (m[dn] == -1) {
      m[dn] = in;
      stack.push_back(dn);
    } else if (m[dn] != in) {
      return false;
    }
  }
  // Connected maps: every dart is reached.  Verify bijectivity and that the
  // induced vertex map is well-defined and injective.
  std::vector<char> used(nd, 0);
  for (int d = 0; d < nd; ++d) {
    if (m[d] < 0 || used[m[d]]) return false;
    used[m[d]] = 1;
  }
  std::vector<int> vmap(a.vertex_count(), -1), vrev(b.vertex_count(), -1);
  for (int d = 0; d < nd; ++d) {
    int va = a.tail(d), vb = b.tail(m[d]);
    if (vmap[va] == -1 && vrev[vb] == -1) {
      vmap[va] = vb;
      vrev[vb] = va;
    } else if (vmap[va] != vb || vrev[vb] != va) {
      return false;
    }
  }
  return true;
}

bool isomorphic_oriented(const PlanarGraph& a, const PlanarGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
      a.face_count() != b.face_count())
    return false;
  if (a.dart_count() == 0) return true;
  for (int d0 = 0; d0 < b.dart_count(); ++d0)
    if (try_dart_map(a, b, d0)) return true;
  return false;
}

}  // namespace

bool isomorphic(const PlanarGraph& a, const PlanarGraph& b, bool allow_reflection) {
  if (isomorphic_oriented(a, b)) return true;
  if (allow_reflection) return isomorphic_oriented(a, b.mirrored());
  return false;
}

}  // namespace polyscribe
