#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "emax/embedding.hpp"
#include "emax/error.hpp"
#include "emax/graph.hpp"

namespace emax {

struct BipartiteGraph {
  Graph graph;
  Bipartition parts;
};

struct LowerBoundFamily {
  Graph graph;
  Bipartition bipartition;
  int g = 0;
  int s = 0;
};

inline Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete_graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

/// K_{a,b}: vertices 0..a-1 form part_a, a..a+b-1 form part_b.
inline BipartiteGraph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InputError("complete_bipartite needs a, b >= 1");
  std::vector<Edge> edges;
  Bipartition p;
  for (int u = 0; u < a; ++u) p.part_a.push_back(u);
  for (int v = a; v < a + b; ++v) p.part_b.push_back(v);
  for (int u : p.part_a)
    for (int v : p.part_b) edges.push_back({u, v});
  return {Graph(a + b, edges), p};
}

/// K8 minus the 5-cycle 0-1-2-3-4-0.
inline Graph k8_minus_c5() {
  std::vector<Edge> edges;
  auto on_cycle = [](int u, int v) { return v < 5 && (v - u == 1 || (u == 0 && v == 4)); };
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v)
      if (!on_cycle(u, v)) edges.push_back({u, v});
  return Graph(8, edges);
}

/// Neighbour orders of a torus embedding of K8 - E(C5) with fourteen
/// triangles and one quadrilateral. Regenerate with `emax regen-fixture --seed 3`.
inline const std::vector<std::vector<int>>& k8_minus_c5_torus_rotation() {
  static const std::vector<std::vector<int>> rotation = {
      {6, 2, 5, 3, 7},       {4, 5, 3, 6, 7},       {7, 5, 0, 6, 4},       {5, 7, 0, 6, 1},
      {5, 1, 7, 2, 6},       {0, 2, 7, 3, 1, 4, 6}, {0, 7, 1, 3, 5, 4, 2}, {1, 6, 0, 3, 5, 2, 4},
  };
  return rotation;
}

inline PseudoEmbedding toroidal_embedding_k8_minus_c5() {
  return embedding_from_neighbor_orders(k8_minus_c5(), k8_minus_c5_torus_rotation());
}

/// Planar bipartite graph with a three-vertex colour class B in which every
/// pair of B-vertices has exactly three common neighbours.
/// B = {0,1,2} = {b1,b2,b3}; A = {3..7} = {x, y, z12, z13, z23}.
inline BipartiteGraph graph_q() {
  constexpr int x = 3, y = 4, z12 = 5, z13 = 6, z23 = 7;
  std::vector<Edge> edges = {{0, x}, {0, y}, {0, z12}, {0, z13}, {1, x}, {1, y},
                             {1, z12}, {1, z23}, {2, x}, {2, y}, {2, z13}, {2, z23}};
  return {Graph(8, edges), Bipartition{{x, y, z12, z13, z23}, {0, 1, 2}}};
}

/// K_{3,2g+2} plus s-2 disjoint copies of Q. B has 2g+2+3(s-2) vertices and
/// contains no ordered sequence of length s.
inline LowerBoundFamily lower_bound_family(int g, int s) {
  if (g < 0 || s < 2) throw InputError("lower_bound_family needs g >= 0 and s >= 2");
  auto [graph, parts] = complete_bipartite(3, 2 * g + 2);
  const BipartiteGraph q = graph_q();
  for (int copy = 0; copy < s - 2; ++copy) {
    const int shift = graph.vertex_count();
    graph = disjoint_union(graph, q.graph);
    for (int v : q.parts.part_a) parts.part_a.push_back(v + shift);
    for (int v : q.parts.part_b) parts.part_b.push_back(v + shift);
  }
  return {std::move(graph), std::move(parts), g, s};
}

enum class SignatureMode { orientable_only, all };

/// Streams every embedding scheme of a simple graph: each vertex rotation has
/// its lowest dart fixed first; in `all` mode every signature vector is visited
/// for each rotation system. Order is deterministic.
class SchemeEnumerator {
 public:
  SchemeEnumerator(const Graph& g, SignatureMode mode, double cap = 1e7) : graph_(g), mode_(mode) {
    double product = 1;
    for (int v = 0; v < g.vertex_count(); ++v) product *= std::tgamma(std::max(1, g.degree(v)));
    if (mode == SignatureMode::all) product *= std::pow(2.0, g.edge_count());
    total_ = product;
    if (product > cap) {
      throw InputError("enumeration size " + std::to_string(static_cast<long double>(product)) +
                       " exceeds cap " + std::to_string(static_cast<long double>(cap)));
    }
    if (mode == SignatureMode::all && g.edge_count() > 62) throw InputError("too many edges to enumerate");
    edges_.reserve(g.edges().size());
    for (const Edge& e : g.edges()) edges_.push_back({e.u, e.v, 1});
    darts_.resize(g.vertex_count());
    for (int id = 0; id < g.edge_count(); ++id) {
      darts_[edges_[id].u].push_back({id, 0});
      darts_[edges_[id].v].push_back({id, 1});
    }
    for (auto& list : darts_) std::sort(list.begin(), list.end());
    if (g.vertex_count() == 0) done_ = true;
  }

  double total() const { return total_; }

  std::optional<PseudoEmbedding> next() {
    if (done_) return std::nullopt;
    std::vector<EmbeddedEdge> edges = edges_;
    for (std::size_t e = 0; e < edges.size(); ++e) edges[e].signature = ((mask_ >> e) & 1u) ? -1 : 1;
    PseudoEmbedding out(graph_.vertex_count(), std::move(edges), darts_);
    advance();
    return out;
  }

 private:
  void advance() {
    if (mode_ == SignatureMode::all) {
      ++mask_;
      if (mask_ < (std::uint64_t{1} << edges_.size())) return;
      mask_ = 0;
    }
    for (int v = graph_.vertex_count() - 1; v >= 0; --v) {
      auto& list = darts_[v];
      if (list.size() > 2 && std::next_permutation(list.begin() + 1, list.end())) return;
    }
    done_ = true;
  }

  Graph graph_;
  SignatureMode mode_;
  std::vector<EmbeddedEdge> edges_;
  std::vector<std::vector<Dart>> darts_;
  std::uint64_t mask_ = 0;
  bool done_ = false;
  double total_ = 0;
};

namespace detail {

inline PseudoEmbedding first_k4_scheme(SignatureMode mode, SurfaceInfo want, std::vector<int> faces) {
  SchemeEnumerator en(complete_graph(4), mode);
  while (auto e = en.next()) {
    const FacialWalkSet fw = trace_faces(*e);
    if (fw.face_vector() == faces && surface_info(*e, fw) == want) return *e;
  }
  throw std::logic_error("K4 block not found");
}

}  // namespace detail

/// K4 in the projective plane: two triangles and a hexagon.
inline const PseudoEmbedding& k4_projective_block() {
  static const PseudoEmbedding block =
      detail::first_k4_scheme(SignatureMode::all, {1, false}, {3, 3, 6});
  return block;
}

/// K4 in the torus: one triangle and one face of length 9.
inline const PseudoEmbedding& k4_torus_block() {
  static const PseudoEmbedding block =
      detail::first_k4_scheme(SignatureMode::orientable_only, {2, true}, {3, 9});
  return block;
}

inline FacialWalk rooted_at_min_vertex(const FacialWalk& w) {
  auto it = std::min_element(w.vertices.begin(), w.vertices.end());
  return rotated_walk(w, static_cast<int>(it - w.vertices.begin()));
}

/// Glues `block` into `host` by identifying a face of each (equal lengths,
/// distinct vertices). Both walks are re-rooted at their lowest-index vertex
/// and matched position by position; the block's boundary edges merge into
/// the host's, its other vertices are appended after the host's. The glued
/// scheme has Euler genus equal to the sum of the two.
inline PseudoEmbedding paste_along_faces(const PseudoEmbedding& host, const FacialWalk& host_face,
                                         const PseudoEmbedding& block, const FacialWalk& block_face) {
  const int t = host_face.length();
  if (t != block_face.length() || t < 3) throw PreconditionError("pasted faces must have equal length >= 3");
  for (const FacialWalk* w : {&host_face, &block_face}) {
    if (static_cast<int>(w->distinct_vertices().size()) != t) {
      throw PreconditionError("pasted faces must have distinct vertices");
    }
  }
  const FacialWalk hw = rooted_at_min_vertex(host_face);
  const FacialWalk bw = rooted_at_min_vertex(block_face);

  std::vector<int> vertex_map(block.vertex_count(), -1);
  std::vector<int> flip(block.vertex_count(), 1);
  std::vector<char> boundary_edge(block.edge_count(), 0);
  for (int j = 0; j < t; ++j) {
    vertex_map[bw.vertices[j]] = hw.vertices[j];
    flip[bw.vertices[j]] = -bw.steps[j].orientation * hw.steps[j].orientation;
    boundary_edge[bw.steps[j].dart.edge] = 1;
  }
  EmbeddingEditor ed(host);
  for (int v = 0; v < block.vertex_count(); ++v)
    if (vertex_map[v] < 0) vertex_map[v] = ed.add_vertex();

  std::vector<int> edge_map(block.edge_count(), -1);
  for (int id = 0; id < block.edge_count(); ++id) {
    if (boundary_edge[id]) continue;
    const auto& be = block.edge(id);
    edge_map[id] = ed.add_edge(vertex_map[be.u], vertex_map[be.v], be.signature * flip[be.u] * flip[be.v]);
  }
  auto map_dart = [&](Dart d) { return Dart{edge_map[d.edge], d.end}; };

  for (int j = 0; j < t; ++j) {
    const Dart in = bw.steps[(j + t - 1) % t].dart.opposite();
    const Dart out = bw.steps[j].dart;
    const int dir = -bw.steps[j].orientation;
    for (Dart d = block.rotate(in, dir); d != out; d = block.rotate(d, dir)) {
      ed.insert_before(hw.steps[j].dart, hw.steps[j].orientation, map_dart(d));
    }
  }
  for (int v = 0; v < block.vertex_count(); ++v) {
    if (vertex_map[v] < host.vertex_count()) continue;
    for (Dart d : block.rotation(v)) ed.append(vertex_map[v], map_dart(d));
  }
  return ed.build();
}

/// Planar K3: two triangular faces.
inline PseudoEmbedding planar_triangle() {
  return embedding_from_neighbor_orders(complete_graph(3), {{1, 2}, {0, 2}, {0, 1}});
}

/// Stacked planar triangulation grown from K3, inserting degree-3 vertices
/// into faces in first-in first-out order until there are >= min_faces faces.
inline PseudoEmbedding stacked_triangulation(int min_faces) {
  PseudoEmbedding e = planar_triangle();
  std::deque<FaceStep> queue;
  for (const auto& w : trace_faces(e).walks) queue.push_back(w.steps.front());
  int faces = 2;
  while (faces < min_faces) {
    const FaceStep target = queue.front();
    queue.pop_front();
    const FacialWalkSet fw = trace_faces(e);
    const int f = find_face(e, fw, target);
    const int first_new_edge = e.edge_count();
    e = insert_vertex_in_face(e, fw.walks[f], {0, 1, 2}).first;
    for (int k = 0; k < 3; ++k) queue.push_back({Dart{first_new_edge + k, 0}, 1});
    faces += 2;
  }
  return e;
}

/// Planar triangulation with K4 blocks glued onto distinct faces: `g` copies
/// of the projective-plane block, or g/2 copies of the torus block when
/// `orientable`. The result is an edge-maximal scheme of Euler genus g that is
/// 3g edges short of a triangulation.
inline PseudoEmbedding construct_proposition2(int g, bool orientable, int base_faces = 0) {
  if (g < 1) throw InputError("construct_proposition2 needs g >= 1");
  if (orientable && g % 2 != 0) throw InputError("orientable surfaces have even Euler genus");
  const int blocks = orientable ? g / 2 : g;
  PseudoEmbedding e = stacked_triangulation(std::max(g, base_faces));
  std::vector<FaceStep> targets;
  {
    const FacialWalkSet fw = trace_faces(e);
    for (int i = 0; i < blocks; ++i) targets.push_back(fw.walks[i].steps.front());
  }
  const PseudoEmbedding& block = orientable ? k4_torus_block() : k4_projective_block();
  const FacialWalkSet block_faces = trace_faces(block);
  const auto tri = std::find_if(block_faces.walks.begin(), block_faces.walks.end(),
                                [](const FacialWalk& w) { return w.length() == 3; });
  for (const FaceStep& target : targets) {
    const FacialWalkSet fw = trace_faces(e);
    e = paste_along_faces(e, fw.walks[find_face(e, fw, target)], block, *tri);
  }
  return e;
}

/// Randomised search over orientable rotation systems of `g` (simulated
/// annealing on the face count) for a scheme of Euler genus `target_genus`.
inline std::optional<PseudoEmbedding> search_min_genus_rotation(const Graph& g, int target_genus,
                                                                std::uint64_t seed, int restarts = 200,
                                                                int iterations = 40000) {
  const int want_faces = 2 - g.vertex_count() + g.edge_count() - target_genus;
  std::mt19937_64 rng(seed);
  auto faces_of = [&](const std::vector<std::vector<int>>& order) {
    return trace_faces(embedding_from_neighbor_orders(g, order)).face_count();
  };
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < restarts; ++attempt) {
    std::vector<std::vector<int>> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      order[v] = g.neighbors(v);
      std::shuffle(order[v].begin(), order[v].end(), rng);
    }
    int current = faces_of(order);
    for (int it = 0; it < iterations && current < want_faces; ++it) {
      const double temperature = std::max(0.05, 1.0 - static_cast<double>(it) / (iterations / 2));
      const int v = static_cast<int>(rng() % g.vertex_count());
      if (order[v].size() < 3) continue;
      const std::size_t i = rng() % order[v].size();
      std::size_t j = rng() % (order[v].size() - 1);
      if (j >= i) ++j;
      std::swap(order[v][i], order[v][j]);
      const int candidate = faces_of(order);
      if (candidate >= current || unit(rng) < std::exp((candidate - current) / temperature)) {
        current = candidate;
      } else {
        std::swap(order[v][i], order[v][j]);
      }
    }
    if (current == want_faces) return embedding_from_neighbor_orders(g, order);
  }
  return std::nullopt;
}

}  // namespace emax
