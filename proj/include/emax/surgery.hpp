#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "emax/bounds.hpp"
#include "emax/embedding.hpp"
#include "emax/error.hpp"
#include "emax/graph.hpp"

namespace emax {

/// nonorientable: chords every 5 steps, bound 5|B|-1.
/// orientable: chords every 4 steps, bound 4|B|-1.
enum class SurgeryMode { nonorientable, orientable };

inline int surgery_modulus(SurgeryMode mode) { return mode == SurgeryMode::nonorientable ? 5 : 4; }

inline const char* to_string(SurgeryMode mode) {
  return mode == SurgeryMode::nonorientable ? "nonorientable" : "orientable";
}

/// Number of faces a length-t face is cut into by chord_faces.
inline int chord_pieces(int t, SurgeryMode mode) {
  if (t < 4) return 1;
  return mode == SurgeryMode::nonorientable ? (t + 2) / 5 : (t + 1) / 4;
}

/// Chord offsets i = 3 (mod p) with 3 <= i <= t - p.
inline std::vector<int> chord_offsets(int t, SurgeryMode mode) {
  const int p = surgery_modulus(mode);
  std::vector<int> out;
  for (int i = 3; i <= t - p; i += p) out.push_back(i);
  return out;
}

namespace detail {

inline int state_index(FaceStep s) { return 2 * s.dart.id() + (s.orientation == 1 ? 0 : 1); }

/// Face index of every traversal state, both directions.
inline std::vector<int> face_of_states(const PseudoEmbedding& e, const FacialWalkSet& faces) {
  std::vector<int> out(4 * e.edge_count(), -1);
  for (int f = 0; f < faces.face_count(); ++f) {
    for (const FaceStep& s : faces.walks[f].steps) {
      out[state_index(s)] = f;
      out[state_index(reverse_step(e, s))] = f;
    }
  }
  return out;
}

inline std::string face_witness(const FacialWalk& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.vertices.size(); ++i) out += (i ? "," : "") + std::to_string(w.vertices[i]);
  return out + "]";
}

}  // namespace detail

/// Cuts every face of length t >= 4 into chord_pieces(t) faces by chords from
/// the start of its first four-distinct window. Chords may duplicate existing
/// edges. Throws PreconditionError naming the face if a piece would have fewer
/// than four distinct vertices.
inline PseudoEmbedding chord_faces(const PseudoEmbedding& e, SurgeryMode mode) {
  if (e.vertex_count() < 4) throw PreconditionError("chord_faces requires n >= 4");
  const SurfaceInfo before = surface_info(e);
  if (mode == SurgeryMode::orientable && !before.orientable) {
    throw PreconditionError("orientable mode on a non-orientable scheme");
  }
  const FacialWalkSet faces = trace_faces(e);
  std::vector<FacialWalk> rooted(faces.walks.size());
  PseudoEmbedding out = e;
  for (int f = 0; f < faces.face_count(); ++f) {
    const FacialWalk& w = faces.walks[f];
    if (w.length() < 4) continue;
    rooted[f] = rotated_walk(w, four_distinct_window(w.vertices));
    const auto offsets = chord_offsets(w.length(), mode);
    if (!offsets.empty()) out = add_fan_chords(out, rooted[f], 0, offsets);
  }

  const FacialWalkSet after = trace_faces(out);
  if (surface_info(out, after) != before) throw std::logic_error("chord_faces changed the surface");
  const auto face_of = detail::face_of_states(out, after);
  for (int f = 0; f < faces.face_count(); ++f) {
    const FacialWalk& w = faces.walks[f];
    if (w.length() < 4) continue;
    std::vector<int> pieces;
    for (const FaceStep& s : w.steps) pieces.push_back(face_of[detail::state_index(s)]);
    std::sort(pieces.begin(), pieces.end());
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
    if (static_cast<int>(pieces.size()) != chord_pieces(w.length(), mode)) {
      throw std::logic_error("face " + detail::face_witness(w) + " split into the wrong number of pieces");
    }
    for (int p : pieces) {
      if (after.walks[p].distinct_vertices().size() < 4) {
        throw PreconditionError("face " + detail::face_witness(w) + " leaves a piece " +
                                detail::face_witness(after.walks[p]) + " with fewer than 4 distinct vertices");
      }
    }
  }
  return out;
}

/// Adds one vertex inside every non-triangular face, joined to the first four
/// distinct vertices of its walk. Apexes are numbered from n upward.
inline std::pair<PseudoEmbedding, VertexSet> insert_apexes(const PseudoEmbedding& e) {
  const FacialWalkSet faces = trace_faces(e);
  PseudoEmbedding out = e;
  VertexSet apexes;
  for (const FacialWalk& w : faces.walks) {
    if (w.length() == 3) continue;
    std::vector<int> corners;
    std::vector<int> seen;
    for (int i = 0; i < w.length() && corners.size() < 4; ++i) {
      if (std::find(seen.begin(), seen.end(), w.vertices[i]) != seen.end()) continue;
      seen.push_back(w.vertices[i]);
      corners.push_back(i);
    }
    if (corners.size() < 4) {
      throw PreconditionError("face " + detail::face_witness(w) + " has fewer than 4 distinct vertices");
    }
    auto [next, apex] = insert_vertex_in_face(out, w, corners);
    out = std::move(next);
    apexes.push_back(apex);
  }
  return {std::move(out), std::move(apexes)};
}

struct BipartiteExtract {
  Graph graph;
  Bipartition parts;
  std::vector<int> original;  // original[new_id] = vertex of the scheme
};

/// Subgraph on B and its neighbours keeping only the edges between the two
/// sides. Vertices keep their relative order.
inline BipartiteExtract bipartite_extract(const PseudoEmbedding& e, const VertexSet& apexes) {
  std::vector<char> is_b(e.vertex_count(), 0), keep(e.vertex_count(), 0);
  for (int b : apexes) is_b.at(b) = keep[b] = 1;
  std::vector<Edge> pairs;
  for (const auto& ed : e.edges()) {
    if (is_b[ed.u] == is_b[ed.v]) continue;
    keep[ed.u] = keep[ed.v] = 1;
    pairs.push_back({std::min(ed.u, ed.v), std::max(ed.u, ed.v)});
  }
  BipartiteExtract out;
  std::vector<int> index(e.vertex_count(), -1);
  for (int v = 0; v < e.vertex_count(); ++v) {
    if (!keep[v]) continue;
    index[v] = static_cast<int>(out.original.size());
    out.original.push_back(v);
    (is_b[v] ? out.parts.part_b : out.parts.part_a).push_back(index[v]);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (Edge& p : pairs) p = {index[p.u], index[p.v]};
  out.graph = Graph(static_cast<int>(out.original.size()), pairs);
  return out;
}

/// Fans every face of length t >= 4 from its walk root with t - 3 chords
/// (loops and parallel edges allowed). Returns the triangulation and the
/// number of edges added.
inline std::pair<PseudoEmbedding, int> complete_to_triangulation(const PseudoEmbedding& e) {
  const SurfaceInfo info = surface_info(e);
  if (e.vertex_count() + info.euler_genus < 3) throw PreconditionError("complete_to_triangulation requires n + g >= 3");
  const FacialWalkSet faces = trace_faces(e);
  PseudoEmbedding out = e;
  int added = 0;
  for (const FacialWalk& w : faces.walks) {
    if (w.length() <= 3) continue;
    std::vector<int> offsets;
    for (int i = 2; i <= w.length() - 2; ++i) offsets.push_back(i);
    out = add_fan_chords(out, w, 0, offsets);
    added += static_cast<int>(offsets.size());
  }
  const FacialWalkSet done = trace_faces(out);
  if (!is_triangulation(done) || surface_info(out, done) != info ||
      out.edge_count() != 3 * (e.vertex_count() + info.euler_genus - 2)) {
    throw std::logic_error("triangulation completion failed");
  }
  return {std::move(out), added};
}

// ---------------------------------------------------------------------------
// Ordered sequences

inline bool is_ordered_sequence(const Graph& g, const VertexSet& seq) {
  std::vector<char> in_seq(g.vertex_count(), 0), covered(g.vertex_count(), 0);
  for (int v : seq) {
    g.check_vertex(v);
    if (in_seq[v]) throw InputError("vertex " + std::to_string(v) + " repeated in sequence");
    in_seq[v] = 1;
  }
  for (int v : seq) {
    const VertexSet nv = closed_neighborhood(g, v);
    int meet = 0;
    for (int u : nv) meet += covered[u];
    if (meet > 2) return false;
    for (int u : nv) covered[u] = 1;
  }
  return true;
}

namespace detail {

/// Working copy of a bipartite graph under vertex deletion.
struct AliveGraph {
  const Graph* g;
  std::vector<char> alive;

  int degree(int v) const {
    int d = 0;
    for (int u : g->neighbors(v)) d += alive[u];
    return d;
  }
  VertexSet neighbors(int v) const {
    VertexSet out;
    for (int u : g->neighbors(v))
      if (alive[u]) out.push_back(u);
    return out;
  }
  void remove_closed(int u) {
    alive[u] = 0;
    for (int w : g->neighbors(u)) alive[w] = 0;
  }
};

inline std::optional<int> low_interference(const AliveGraph& a, const VertexSet& part_b, int c) {
  for (int b : part_b) {
    if (!a.alive[b]) continue;
    int heavy = 0;
    for (int u : a.neighbors(b)) heavy += a.degree(u) >= c;
    if (heavy <= 2) return b;
  }
  return std::nullopt;
}

/// Neighbours of v other than the two of highest degree (ties: lower index kept).
inline VertexSet all_but_two_heaviest(const AliveGraph& a, int v) {
  VertexSet nb = a.neighbors(v);
  std::stable_sort(nb.begin(), nb.end(), [&](int x, int y) { return a.degree(x) > a.degree(y); });
  if (nb.size() <= 2) return {};
  return VertexSet(nb.begin() + 2, nb.end());
}

inline VertexSet sorted_b(const Graph& g, const Bipartition& p) {
  validate_bipartition(g, p);
  VertexSet b = p.part_b;
  std::sort(b.begin(), b.end());
  return b;
}

}  // namespace detail

/// Lowest-index vertex of B with at most two neighbours of degree >= c.
/// Throws HypothesisViolated when none exists.
inline int find_low_interference_vertex(const Graph& g, const Bipartition& p, int c) {
  if (c < 7) throw InputError("c must be at least 7");
  const VertexSet b = detail::sorted_b(g, p);
  if (b.empty()) throw InputError("part_b is empty");
  detail::AliveGraph a{&g, std::vector<char>(g.vertex_count(), 1)};
  if (auto v = detail::low_interference(a, b, c)) return *v;
  throw HypothesisViolated("no vertex of B has at most two neighbours of degree >= " + std::to_string(c));
}

enum class SequenceRoute { greedy, search, none, budget_exhausted };

inline const char* to_string(SequenceRoute r) {
  switch (r) {
    case SequenceRoute::greedy: return "greedy";
    case SequenceRoute::search: return "search";
    case SequenceRoute::none: return "none";
    case SequenceRoute::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

struct OrderedSequenceResult {
  std::optional<VertexSet> sequence;  // v_1..v_s
  SequenceRoute route = SequenceRoute::none;
  explicit operator bool() const { return sequence.has_value(); }
};

namespace detail {

inline std::optional<VertexSet> greedy_sequence(AliveGraph a, const VertexSet& part_b, int s,
                                                const std::function<int(int)>& c_of_level) {
  VertexSet tail;  // v_s, v_{s-1}, ...
  for (int level = s; level >= 1; --level) {
    std::optional<int> v;
    if (level == 1) {
      for (int b : part_b)
        if (a.alive[b]) {
          v = b;
          break;
        }
    } else {
      v = low_interference(a, part_b, c_of_level(level));
    }
    if (!v) return std::nullopt;
    for (int u : all_but_two_heaviest(a, *v)) a.remove_closed(u);
    a.alive[*v] = 0;
    tail.push_back(*v);
  }
  std::reverse(tail.begin(), tail.end());
  return tail;
}

struct SequenceSearch {
  const VertexSet& part_b;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  // Appends v_1..v_s to out on success.
  bool run(AliveGraph& a, int s, VertexSet& out) {
    if (s == 0) return true;
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    for (int v : part_b) {
      if (!a.alive[v]) continue;
      const VertexSet nb = a.neighbors(v);
      const int n = static_cast<int>(nb.size());
      // Keep every subset of size min(2, n): dropping more only shrinks the rest.
      std::vector<std::pair<int, int>> keeps;
      if (n <= 2) {
        keeps.push_back({-1, -1});
      } else {
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) keeps.push_back({i, j});
      }
      for (auto [i, j] : keeps) {
        const std::vector<char> saved = a.alive;
        if (n > 2)
          for (int k = 0; k < n; ++k)
            if (k != i && k != j) a.remove_closed(nb[k]);
        a.alive[v] = 0;
        const bool ok = run(a, s - 1, out);
        a.alive = saved;
        if (ok) {
          out.push_back(v);
          return true;
        }
        if (exhausted) return false;
      }
    }
    return false;
  }
};

}  // namespace detail

/// Looks for an ordered sequence of length s inside B. The recursive greedy
/// (low-interference vertex with threshold c_schedule(level)) runs first; if it
/// fails, an exhaustive search over the same recursion decides existence.
inline OrderedSequenceResult find_ordered_sequence(const Graph& g, const Bipartition& p, int s,
                                                   const std::function<int(int)>& c_schedule,
                                                   std::uint64_t node_budget = 5'000'000) {
  if (s < 1) throw InputError("s must be at least 1");
  const VertexSet b = detail::sorted_b(g, p);
  for (int v : b)
    if (g.degree(v) > 4) throw PreconditionError("vertex " + std::to_string(v) + " of B has degree > 4");
  detail::AliveGraph a{&g, std::vector<char>(g.vertex_count(), 1)};
  auto checked_c = [&](int level) {
    const int c = c_schedule(level);
    if (c < 7) throw InputError("schedule gives c = " + std::to_string(c) + " < 7 at level " + std::to_string(level));
    return c;
  };
  if (auto seq = detail::greedy_sequence(a, b, s, checked_c)) {
    if (!is_ordered_sequence(g, *seq)) throw std::logic_error("greedy produced an unordered sequence");
    return {std::move(seq), SequenceRoute::greedy};
  }
  detail::SequenceSearch search{b, node_budget};
  VertexSet out;
  if (search.run(a, s, out)) {
    if (!is_ordered_sequence(g, out)) throw std::logic_error("search produced an unordered sequence");
    return {std::move(out), SequenceRoute::search};
  }
  return {std::nullopt, search.exhausted ? SequenceRoute::budget_exhausted : SequenceRoute::none};
}

inline OrderedSequenceResult find_ordered_sequence(const Graph& g, const Bipartition& p, int s,
                                                   const std::vector<int>& c_by_level) {
  return find_ordered_sequence(g, p, s, [&](int level) {
    if (level < 2 || level - 2 >= static_cast<int>(c_by_level.size())) {
      throw InputError("schedule has no entry for level " + std::to_string(level));
    }
    return c_by_level[level - 2];
  });
}

/// Level thresholds from the optimal schedule for (g, s); level 2 uses 7.
inline std::function<int(int)> default_c_schedule(int g, int s) {
  if (g < 1 || s < 3) return [](int) { return 7; };
  auto sched = std::make_shared<Schedule>(optimal_schedule(g, s));
  return [sched](int level) { return level < 3 ? 7 : sched->c_at(level); };
}

inline OrderedSequenceResult find_ordered_sequence(const Graph& g, const Bipartition& p, int s, int genus) {
  return find_ordered_sequence(g, p, s, default_c_schedule(genus, s));
}

/// |seq| when seq is ordered and every N[v] is a clique on >= 5 vertices, else 0.
inline int genus_certificate(const Graph& g, const VertexSet& seq) {
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v : seq) {
    if (v < 0 || v >= g.vertex_count() || seen[v]) return 0;
    seen[v] = 1;
  }
  if (!is_ordered_sequence(g, seq)) return 0;
  for (int v : seq) {
    const VertexSet nv = closed_neighborhood(g, v);
    if (nv.size() < 5 || !is_clique(g, nv)) return 0;
  }
  return static_cast<int>(seq.size());
}

// ---------------------------------------------------------------------------
// Pipeline

struct SurgeryReport {
  SurgeryMode mode = SurgeryMode::nonorientable;
  PseudoEmbedding input;
  PseudoEmbedding chorded;
  PseudoEmbedding apexed;
  VertexSet apexes;
  BipartiteExtract extract;
  SurfaceInfo surface;
  int edges_short = 0;
  int edges_added_to_triangulate = 0;
  int chords_added = 0;
  std::vector<std::string> violations;

  int bound() const {
    return surgery_modulus(mode) * static_cast<int>(apexes.size()) - 1;
  }
  bool ok() const { return violations.empty(); }
};

/// Chords, apexes and bipartite extraction on an edge-maximal scheme, plus a
/// triangulation completion of the input. Every report invariant is checked;
/// failures are listed in `violations`.
inline SurgeryReport run_lemma5_pipeline(const PseudoEmbedding& e, SurgeryMode mode) {
  if (e.vertex_count() < 4) throw PreconditionError("pipeline requires n >= 4");
  const FacialWalkSet faces = trace_faces(e);
  if (auto m = is_edge_maximal_embedding(e, faces); !m) {
    throw PreconditionError("scheme is not edge-maximal: vertices " + std::to_string(m.u) + " and " +
                            std::to_string(m.v) + " share face " + std::to_string(m.face));
  }
  SurgeryReport r;
  r.mode = mode;
  r.input = e;
  r.surface = surface_info(e, faces);
  r.chorded = chord_faces(e, mode);
  r.chords_added = r.chorded.edge_count() - e.edge_count();
  std::tie(r.apexed, r.apexes) = insert_apexes(r.chorded);
  r.extract = bipartite_extract(r.apexed, r.apexes);
  r.edges_short = edges_short(e, r.surface);
  r.edges_added_to_triangulate = complete_to_triangulation(e).second;

  auto fail = [&](std::string msg) { r.violations.push_back(std::move(msg)); };
  if (surface_info(r.apexed) != r.surface) fail("apex insertion changed the surface");
  const Graph simple = underlying_graph(r.apexed);
  for (int b : r.apexes) {
    if (r.apexed.rotation(b).size() != 4) fail("apex " + std::to_string(b) + " does not have degree 4");
    if (!is_clique(simple, closed_neighborhood(simple, b))) {
      fail("closed neighbourhood of apex " + std::to_string(b) + " is not a clique");
    }
  }
  for (int b : r.extract.parts.part_b) {
    if (r.extract.graph.degree(b) != 4) fail("extract vertex " + std::to_string(b) + " does not have degree 4");
  }
  if (r.edges_added_to_triangulate != r.edges_short) fail("triangulation completion disagrees with edges_short");
  if (r.apexes.empty() ? r.edges_short != 0 : r.edges_short > r.bound()) {
    fail("edges_short " + std::to_string(r.edges_short) + " exceeds " + std::to_string(r.bound()));
  }
  return r;
}

}  // namespace emax
