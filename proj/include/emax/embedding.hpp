#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "emax/error.hpp"
#include "emax/graph.hpp"

namespace emax {

/// One end of an edge. `end` 0 sits at the edge's first endpoint, 1 at the second.
struct Dart {
  int edge = 0;
  int end = 0;

  int id() const { return 2 * edge + end; }
  Dart opposite() const { return {edge, 1 - end}; }
  static Dart from_id(int id) { return {id / 2, id % 2}; }

  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Pseudograph edge with its signature (+1 or -1). Loops have u == v.
struct EmbeddedEdge {
  int u = 0;
  int v = 0;
  int signature = 1;

  friend bool operator==(const EmbeddedEdge&, const EmbeddedEdge&) = default;
};

/// Embedding scheme of a pseudograph: a cyclic order of darts around each
/// vertex plus a signature per edge. Validated on construction, immutable after.
class PseudoEmbedding {
 public:
  PseudoEmbedding() = default;

  PseudoEmbedding(int vertex_count, std::vector<EmbeddedEdge> edges,
                  std::vector<std::vector<Dart>> rotation)
      : vertex_count_(vertex_count), edges_(std::move(edges)), rotation_(std::move(rotation)) {
    validate();
  }

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<EmbeddedEdge>& edges() const { return edges_; }
  const EmbeddedEdge& edge(int e) const { return edges_.at(e); }
  int signature(int e) const { return edges_.at(e).signature; }
  const std::vector<Dart>& rotation(int v) const { return rotation_.at(v); }
  const std::vector<std::vector<Dart>>& rotations() const { return rotation_; }

  int dart_vertex(Dart d) const {
    const EmbeddedEdge& e = edges_.at(d.edge);
    return d.end == 0 ? e.u : e.v;
  }

  int position(Dart d) const { return position_.at(d.id()); }

  /// Neighbour of `d` in its vertex rotation: successor for direction +1,
  /// predecessor for -1.
  Dart rotate(Dart d, int direction) const {
    const auto& rot = rotation_[dart_vertex(d)];
    const int size = static_cast<int>(rot.size());
    const int at = position_[d.id()];
    return rot[((at + direction) % size + size) % size];
  }

  friend bool operator==(const PseudoEmbedding& a, const PseudoEmbedding& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ && a.rotation_ == b.rotation_;
  }

 private:
  void validate() {
    if (vertex_count_ < 0) throw InputError("negative vertex count");
    if (static_cast<int>(rotation_.size()) != vertex_count_) {
      throw InputError("rotation lists " + std::to_string(rotation_.size()) + " vertices, expected " +
                       std::to_string(vertex_count_));
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto& ed = edges_[e];
      const std::string where = "edges[" + std::to_string(e) + "]";
      if (ed.u < 0 || ed.v < 0 || ed.u >= vertex_count_ || ed.v >= vertex_count_) {
        throw InputError(where + ": endpoint out of range");
      }
      if (ed.signature != 1 && ed.signature != -1) {
        throw InputError(where + ": signature must be +1 or -1");
      }
    }
    position_.assign(2 * edges_.size(), -1);
    for (int v = 0; v < vertex_count_; ++v) {
      for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
        const Dart d = rotation_[v][i];
        const std::string where = "rotation[" + std::to_string(v) + "][" + std::to_string(i) + "]";
        if (d.edge < 0 || d.edge >= edge_count() || (d.end != 0 && d.end != 1)) {
          throw InputError(where + ": no such dart");
        }
        if (dart_vertex(d) != v) {
          throw InputError(where + ": dart (" + std::to_string(d.edge) + "," + std::to_string(d.end) +
                           ") belongs to vertex " + std::to_string(dart_vertex(d)));
        }
        if (position_[d.id()] != -1) throw InputError(where + ": dart listed twice");
        position_[d.id()] = static_cast<int>(i);
      }
    }
    for (std::size_t id = 0; id < position_.size(); ++id) {
      if (position_[id] == -1) {
        const Dart d = Dart::from_id(static_cast<int>(id));
        throw InputError("dart (" + std::to_string(d.edge) + "," + std::to_string(d.end) +
                         ") missing from rotation of vertex " + std::to_string(dart_vertex(d)));
      }
    }
  }

  int vertex_count_ = 0;
  std::vector<EmbeddedEdge> edges_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<int> position_;
};

/// A traversal state: leave the current vertex along `dart` while the local
/// orientation is `orientation`.
struct FaceStep {
  Dart dart;
  int orientation = 1;

  friend bool operator==(const FaceStep&, const FaceStep&) = default;
  friend auto operator<=>(const FaceStep&, const FaceStep&) = default;
};

struct FacialWalk {
  std::vector<FaceStep> steps;
  std::vector<int> vertices;  // vertices[i] is where steps[i] starts

  int length() const { return static_cast<int>(steps.size()); }
  VertexSet distinct_vertices() const {
    VertexSet out = vertices;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

struct FacialWalkSet {
  std::vector<FacialWalk> walks;

  int face_count() const { return static_cast<int>(walks.size()); }
  std::vector<int> lengths() const {
    std::vector<int> out;
    for (const auto& w : walks) out.push_back(w.length());
    return out;
  }
  /// Face lengths in ascending order.
  std::vector<int> face_vector() const {
    auto out = lengths();
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct SurfaceInfo {
  int euler_genus = 0;
  bool orientable = true;

  friend bool operator==(const SurfaceInfo&, const SurfaceInfo&) = default;
};

inline bool is_connected(const PseudoEmbedding& e) {
  const int n = e.vertex_count();
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& ed : e.edges()) {
    adj[ed.u].push_back(ed.v);
    adj[ed.v].push_back(ed.u);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

/// The state that traverses the same side of the same edge in the opposite direction.
inline FaceStep reverse_step(const PseudoEmbedding& e, FaceStep s) {
  return {s.dart.opposite(), -s.orientation * e.signature(s.dart.edge)};
}

/// Successor of a traversal state along its face.
inline FaceStep next_step(const PseudoEmbedding& e, FaceStep s) {
  const Dart arrive = s.dart.opposite();
  const int orient = s.orientation * e.signature(s.dart.edge);
  return {e.rotate(arrive, orient), orient};
}

/// Traces every face once. Each face has two traversal orbits (one per
/// direction); the orbit through the lowest unused state (dart id ascending,
/// orientation +1 first) is kept and its reverse is retired.
inline FacialWalkSet trace_faces(const PseudoEmbedding& e) {
  if (!is_connected(e)) throw InputError("embedding is not connected; faces and genus are undefined");
  FacialWalkSet out;
  if (e.edge_count() == 0) {
    out.walks.push_back(FacialWalk{{}, {}});  // a lone vertex on the sphere
    return out;
  }
  const int states = 4 * e.edge_count();
  auto index = [](FaceStep s) { return 2 * s.dart.id() + (s.orientation == 1 ? 0 : 1); };
  std::vector<char> used(states, 0);
  for (int start = 0; start < states; ++start) {
    if (used[start]) continue;
    const FaceStep first{Dart::from_id(start / 2), start % 2 == 0 ? 1 : -1};
    FacialWalk walk;
    FaceStep s = first;
    do {
      used[index(s)] = 1;
      walk.steps.push_back(s);
      walk.vertices.push_back(e.dart_vertex(s.dart));
      s = next_step(e, s);
    } while (s != first);
    for (const FaceStep& st : walk.steps) {
      const int r = index(reverse_step(e, st));
      if (used[r]) throw std::logic_error("face orbit coincides with its reverse");
      used[r] = 1;
    }
    out.walks.push_back(std::move(walk));
  }
  return out;
}

/// Switching class test: assigns vertex flips breadth-first; returns the first
/// edge that cannot be made positive, or nullopt when the scheme is orientable.
inline std::optional<int> orientability_conflict(const PseudoEmbedding& e) {
  const int n = e.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> inc(n);
  for (int id = 0; id < e.edge_count(); ++id) {
    const auto& ed = e.edge(id);
    if (ed.u == ed.v) {
      if (ed.signature == -1) return id;
      continue;
    }
    inc[ed.u].push_back({ed.v, id});
    inc[ed.v].push_back({ed.u, id});
  }
  std::vector<int> flip(n, 0);
  for (int root = 0; root < n; ++root) {
    if (flip[root] != 0) continue;
    flip[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [w, id] : inc[v]) {
        const int want = flip[v] * e.signature(id);
        if (flip[w] == 0) {
          flip[w] = want;
          q.push(w);
        } else if (flip[w] != want) {
          return id;
        }
      }
    }
  }
  return std::nullopt;
}

inline SurfaceInfo surface_info(const PseudoEmbedding& e, const FacialWalkSet& faces) {
  SurfaceInfo info;
  info.euler_genus = 2 - e.vertex_count() + e.edge_count() - faces.face_count();
  info.orientable = !orientability_conflict(e).has_value();
  if (info.euler_genus < 0 || (info.orientable && info.euler_genus % 2 != 0)) {
    throw std::logic_error("inconsistent Euler characteristic: genus " + std::to_string(info.euler_genus));
  }
  return info;
}

inline SurfaceInfo surface_info(const PseudoEmbedding& e) { return surface_info(e, trace_faces(e)); }

/// Simple graph on the same vertices with loops dropped and parallels merged.
inline Graph underlying_graph(const PseudoEmbedding& e) {
  std::set<Edge> pairs;
  for (const auto& ed : e.edges())
    if (ed.u != ed.v) pairs.insert({std::min(ed.u, ed.v), std::max(ed.u, ed.v)});
  return Graph(e.vertex_count(), std::vector<Edge>(pairs.begin(), pairs.end()));
}

inline bool is_simple(const PseudoEmbedding& e) {
  std::set<Edge> pairs;
  for (const auto& ed : e.edges()) {
    if (ed.u == ed.v) return false;
    if (!pairs.insert({std::min(ed.u, ed.v), std::max(ed.u, ed.v)}).second) return false;
  }
  return true;
}

struct MaximalityResult {
  bool maximal = true;
  int face = -1;  // witness face index when not maximal
  int u = -1;     // witness non-adjacent pair on that face
  int v = -1;

  explicit operator bool() const { return maximal; }
};

/// Edge-maximal iff the vertex set of every face induces a clique.
inline MaximalityResult is_edge_maximal_embedding(const PseudoEmbedding& e, const FacialWalkSet& faces) {
  if (!is_simple(e)) throw PreconditionError("edge-maximality is defined for simple graphs only");
  const Graph g = underlying_graph(e);
  for (int f = 0; f < faces.face_count(); ++f) {
    const VertexSet vs = faces.walks[f].distinct_vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!g.adjacent(vs[i], vs[j])) return {false, f, vs[i], vs[j]};
  }
  return {};
}

inline MaximalityResult is_edge_maximal_embedding(const PseudoEmbedding& e) {
  return is_edge_maximal_embedding(e, trace_faces(e));
}

inline bool is_triangulation(const FacialWalkSet& faces) {
  return std::all_of(faces.walks.begin(), faces.walks.end(),
                     [](const FacialWalk& w) { return w.length() == 3; });
}

inline bool is_triangulation(const PseudoEmbedding& e) { return is_triangulation(trace_faces(e)); }

/// 3(n + g - 2) - m: how many edges a full pseudograph triangulation would add.
inline int edges_short(const PseudoEmbedding& e, const SurfaceInfo& info) {
  const int n = e.vertex_count();
  if (n + info.euler_genus < 3) throw PreconditionError("edges_short requires n + g >= 3");
  return 3 * (n + info.euler_genus - 2) - e.edge_count();
}

inline int edges_short(const PseudoEmbedding& e) { return edges_short(e, surface_info(e)); }

/// First offset r whose four cyclically consecutive walk vertices are distinct.
inline int four_distinct_window(std::span<const int> walk) {
  const int t = static_cast<int>(walk.size());
  if (t < 4) throw PreconditionError("four_distinct_window needs a walk of length >= 4");
  for (int r = 0; r < t; ++r) {
    int a = walk[r], b = walk[(r + 1) % t], c = walk[(r + 2) % t], d = walk[(r + 3) % t];
    if (a != b && a != c && a != d && b != c && b != d && c != d) return r;
  }
  throw PreconditionError("facial walk has no four distinct consecutive vertices");
}

/// Builds a scheme of a simple graph from per-vertex neighbour orders.
inline PseudoEmbedding embedding_from_neighbor_orders(const Graph& g,
                                                      const std::vector<std::vector<int>>& order,
                                                      std::span<const int> signatures = {}) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) throw InputError("neighbour order per vertex required");
  std::vector<EmbeddedEdge> edges;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& ed = g.edges()[i];
    int sig = signatures.empty() ? 1 : signatures[i];
    edges.push_back({ed.u, ed.v, sig});
  }
  auto edge_id = [&](int u, int v) {
    Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(g.edges().begin(), g.edges().end(), key);
    if (it == g.edges().end() || *it != key) {
      throw InputError("neighbour order names non-edge " + std::to_string(u) + " " + std::to_string(v));
    }
    return static_cast<int>(it - g.edges().begin());
  };
  std::vector<std::vector<Dart>> rotation(n);
  for (int v = 0; v < n; ++v) {
    for (int w : order[v]) {
      const int id = edge_id(v, w);
      rotation[v].push_back({id, edges[id].u == v ? 0 : 1});
    }
  }
  return PseudoEmbedding(n, std::move(edges), std::move(rotation));
}

/// Mutable working copy used by surgery; darts are placed relative to corners
/// of faces of the scheme being edited.
class EmbeddingEditor {
 public:
  explicit EmbeddingEditor(const PseudoEmbedding& base)
      : vertex_count_(base.vertex_count()), edges_(base.edges()), rotation_(base.rotations()) {}

  int add_vertex() {
    rotation_.emplace_back();
    return vertex_count_++;
  }

  /// New edge u->v; its darts still have to be placed.
  int add_edge(int u, int v, int signature) {
    edges_.push_back({u, v, signature});
    return static_cast<int>(edges_.size()) - 1;
  }

  /// Places `dart` immediately before `anchor` when reading the anchor's
  /// rotation in `direction`, i.e. inside the corner that ends at `anchor`.
  void insert_before(Dart anchor, int direction, Dart dart) {
    auto& rot = rotation_.at(vertex_of(anchor));
    auto it = std::find(rot.begin(), rot.end(), anchor);
    if (it == rot.end()) throw std::logic_error("anchor dart not placed");
    if (direction == -1) ++it;
    rot.insert(it, dart);
  }

  void append(int vertex, Dart dart) { rotation_.at(vertex).push_back(dart); }

  int vertex_of(Dart d) const { return d.end == 0 ? edges_.at(d.edge).u : edges_.at(d.edge).v; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  PseudoEmbedding build() const { return PseudoEmbedding(vertex_count_, edges_, rotation_); }

 private:
  int vertex_count_;
  std::vector<EmbeddedEdge> edges_;
  std::vector<std::vector<Dart>> rotation_;
};

/// Adds chords across one face from the corner at walk position `root` to the
/// corners at `root + offset` (mod length). The chord signature is the product
/// of the two corner orientations so both new walks stay consistent.
inline PseudoEmbedding add_fan_chords(const PseudoEmbedding& e, const FacialWalk& walk, int root,
                                      std::vector<int> offsets) {
  const int t = walk.length();
  std::sort(offsets.begin(), offsets.end(), std::greater<>());
  EmbeddingEditor ed(e);
  const FaceStep from = walk.steps[root];
  for (int off : offsets) {
    if (off <= 0 || off >= t) throw PreconditionError("chord offset outside the face");
    const int at = (root + off) % t;
    const FaceStep to = walk.steps[at];
    const int id = ed.add_edge(walk.vertices[root], walk.vertices[at], from.orientation * to.orientation);
    ed.insert_before(from.dart, from.orientation, Dart{id, 0});
    ed.insert_before(to.dart, to.orientation, Dart{id, 1});
  }
  return ed.build();
}

/// Places a new vertex inside a face and joins it to the corners at the given
/// walk positions (ascending, distinct). Returns the new vertex index.
inline std::pair<PseudoEmbedding, int> insert_vertex_in_face(const PseudoEmbedding& e, const FacialWalk& walk,
                                                             std::vector<int> corners) {
  std::sort(corners.begin(), corners.end());
  EmbeddingEditor ed(e);
  const int w = ed.add_vertex();
  std::vector<Dart> at_w;
  for (int c : corners) {
    const FaceStep s = walk.steps.at(c);
    const int id = ed.add_edge(w, walk.vertices[c], s.orientation);
    ed.insert_before(s.dart, s.orientation, Dart{id, 1});
    at_w.push_back(Dart{id, 0});
  }
  std::reverse(at_w.begin(), at_w.end());
  for (Dart d : at_w) ed.append(w, d);
  return {ed.build(), w};
}

/// Index of the face whose orbit (in either direction) contains `step`.
inline int find_face(const PseudoEmbedding& e, const FacialWalkSet& faces, FaceStep step) {
  const FaceStep rev = reverse_step(e, step);
  for (int f = 0; f < faces.face_count(); ++f)
    for (const FaceStep& s : faces.walks[f].steps)
      if (s == step || s == rev) return f;
  return -1;
}

/// Same face read in the opposite direction; position 0 stays at the same vertex.
inline FacialWalk reversed_walk(const PseudoEmbedding& e, const FacialWalk& w) {
  const int t = w.length();
  FacialWalk out;
  for (int i = 0; i < t; ++i) {
    // Reverse of step (t - i - 1) starts where that step ends.
    const FaceStep s = w.steps[(2 * t - i - 1) % t];
    out.steps.push_back(reverse_step(e, s));
    out.vertices.push_back(w.vertices[(t - i) % t]);
  }
  return out;
}

/// Walk re-rooted so that position 0 is position `offset` of the original.
inline FacialWalk rotated_walk(const FacialWalk& w, int offset) {
  FacialWalk out;
  const int t = w.length();
  for (int i = 0; i < t; ++i) {
    out.steps.push_back(w.steps[(offset + i) % t]);
    out.vertices.push_back(w.vertices[(offset + i) % t]);
  }
  return out;
}

}  // namespace emax
