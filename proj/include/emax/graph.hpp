#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "emax/error.hpp"

namespace emax {

/// Sorted list of distinct vertex indices.
using VertexSet = std::vector<int>;

/// Undirected edge stored as (min, max).
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; edges are
/// kept in canonical sorted order so every traversal is deterministic.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int vertex_count) : adjacency_(check_count(vertex_count)) {}

  Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
        throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") has an endpoint outside 0.." + std::to_string(vertex_count - 1));
      }
      if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
      edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
      throw InputError("parallel edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    }
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  }

  Graph(int vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adjacency_[v];
  }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(int u, int v) const {
    const auto& n = neighbors(u);
    return std::binary_search(n.begin(), n.end(), v);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) {
      throw InputError("vertex " + std::to_string(v) + " out of range 0.." +
                       std::to_string(vertex_count() - 1));
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  static std::size_t check_count(int n) {
    if (n < 0) throw InputError("negative vertex count");
    return static_cast<std::size_t>(n);
  }

  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;
};

/// Two-colour classes of a bipartite graph; both stored sorted.
struct Bipartition {
  VertexSet part_a;
  VertexSet part_b;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Throws InputError unless `p` is a proper bipartition of `g`.
inline void validate_bipartition(const Graph& g, const Bipartition& p) {
  std::vector<int> side(g.vertex_count(), -1);
  auto mark = [&](const VertexSet& part, int label) {
    for (int v : part) {
      if (v < 0 || v >= g.vertex_count()) {
        throw InputError("bipartition vertex " + std::to_string(v) + " out of range");
      }
      if (side[v] != -1) {
        throw InputError("vertex " + std::to_string(v) + " appears twice in bipartition");
      }
      side[v] = label;
    }
  };
  mark(p.part_a, 0);
  mark(p.part_b, 1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (side[v] == -1) throw InputError("vertex " + std::to_string(v) + " not covered by bipartition");
  }
  for (const Edge& e : g.edges()) {
    if (side[e.u] == side[e.v]) {
      throw InputError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                       " lies inside one part");
    }
  }
}

inline VertexSet closed_neighborhood(const Graph& g, int v) {
  VertexSet out = g.neighbors(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

inline VertexSet common_neighbors(const Graph& g, int u, int v) {
  if (u == v) throw InputError("common_neighbors requires distinct vertices");
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool is_clique(const Graph& g, std::span<const int> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    g.check_vertex(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] != vertices[j] && !g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

inline int min_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("min_degree of an empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

namespace detail {

// Depth-first Hamilton cycle search on the subgraph induced by `vs`;
// the first vertex is fixed to break rotational symmetry.
inline bool has_hamilton_cycle(const Graph& g, const std::vector<int>& vs) {
  const int d = static_cast<int>(vs.size());
  if (d < 3) return false;
  std::vector<std::uint32_t> adj(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j && g.adjacent(vs[i], vs[j])) adj[i] |= 1u << j;
  const std::uint32_t full = (d == 32) ? ~0u : ((1u << d) - 1);
  auto dfs = [&](auto&& self, int at, std::uint32_t used) -> bool {
    if (used == full) return (adj[at] & 1u) != 0;
    for (std::uint32_t cand = adj[at] & ~used; cand; cand &= cand - 1) {
      int next = __builtin_ctz(cand);
      if (self(self, next, used | (1u << next))) return true;
    }
    return false;
  };
  return dfs(dfs, 0, 1u);
}

inline bool connected_without(const Graph& g, const std::vector<char>& removed) {
  const int n = g.vertex_count();
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

}  // namespace detail

/// True iff every open neighbourhood induces a subgraph with a Hamilton cycle.
/// Exhaustive search; neighbourhoods larger than `max_degree` are rejected.
inline bool is_locally_hamiltonian(const Graph& g, int max_degree = 10) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 3) return false;
    if (g.degree(v) > max_degree) {
      throw PreconditionError("vertex " + std::to_string(v) + " has degree " +
                              std::to_string(g.degree(v)) + " above the Hamilton search cap " +
                              std::to_string(max_degree));
    }
    if (!detail::has_hamilton_cycle(g, g.neighbors(v))) return false;
  }
  return true;
}

/// Vertex-connectivity >= k for k in {1,2,3}, by deleting every vertex subset
/// of size < k. A graph needs more than k vertices to qualify.
inline bool is_k_connected(const Graph& g, int k, int max_vertices = 64) {
  if (k < 1 || k > 3) throw InputError("is_k_connected supports k in {1,2,3}");
  const int n = g.vertex_count();
  if (n > max_vertices) {
    throw PreconditionError("connectivity brute force capped at " + std::to_string(max_vertices) +
                            " vertices");
  }
  if (n <= k) return false;
  std::vector<char> removed(n, 0);
  if (!detail::connected_without(g, removed)) return false;
  if (k >= 2) {
    for (int a = 0; a < n; ++a) {
      removed[a] = 1;
      bool ok = detail::connected_without(g, removed);
      if (ok && k == 3) {
        for (int b = a + 1; b < n && ok; ++b) {
          removed[b] = 1;
          ok = detail::connected_without(g, removed);
          removed[b] = 0;
        }
      }
      removed[a] = 0;
      if (!ok) return false;
    }
  }
  return true;
}

/// Euler-formula lower bound on the Euler genus of a bipartite graph:
/// m <= 2(n + g - 2) gives g >= ceil(m/2) - n + 2.
inline int bipartite_genus_lower_bound(const Graph& g, const Bipartition& p) {
  validate_bipartition(g, p);
  const int n = g.vertex_count();
  if (n < 3) throw PreconditionError("bipartite genus bound needs n >= 3");
  const int m = g.edge_count();
  return std::max(0, (m + 1) / 2 - n + 2);
}

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.vertex_count();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

/// Subgraph induced on `keep` (sorted); vertices are renumbered in order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
  return Graph(static_cast<int>(keep.size()), edges);
}

// --- edge-list text format -------------------------------------------------
//   n m
//   u v      (m lines, 0-based)
// Blank lines and '#' comments are ignored.

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_tokens = [&](std::vector<long long>& out) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      out.clear();
      std::string tok;
      while (ss >> tok) {
        try {
          std::size_t used = 0;
          long long value = std::stoll(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
          out.push_back(value);
        } catch (const std::exception&) {
          throw InputError("line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
        }
      }
      if (!out.empty()) return true;
    }
    return false;
  };
  std::vector<long long> toks;
  if (!next_tokens(toks)) throw InputError("edge list is empty");
  if (toks.size() != 2 || toks[0] < 0 || toks[1] < 0) {
    throw InputError("line " + std::to_string(line_no) + ": expected header 'n m'");
  }
  const int n = static_cast<int>(toks[0]);
  const long long m = toks[1];
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_tokens(toks)) {
      throw InputError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    if (toks.size() != 2) throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
    if (toks[0] < 0 || toks[1] < 0 || toks[0] >= n || toks[1] >= n) {
      throw InputError("line " + std::to_string(line_no) + ": vertex out of range");
    }
    edges.push_back({static_cast<int>(toks[0]), static_cast<int>(toks[1])});
  }
  if (next_tokens(toks)) {
    throw InputError("line " + std::to_string(line_no) + ": trailing data after " +
                     std::to_string(m) + " edges");
  }
  try {
    return Graph(n, edges);
  } catch (const InputError& e) {
    throw InputError(std::string("edge list: ") + e.what());
  }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace emax
