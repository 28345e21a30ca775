#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "emax/emax.hpp"

namespace emax::support {

/// Random connected simple graph: a random spanning tree plus extra edges.
inline Graph random_connected_graph(std::mt19937& rng, int n, int extra) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.push_back({u, v});
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int tries = 0; tries < 20 * extra && extra > 0; ++tries) {
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    Edge e{std::min(u, v), std::max(u, v)};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
    edges.push_back(e);
    --extra;
  }
  return Graph(n, edges);
}

/// Random rotation system; signatures random unless `orientable`.
inline PseudoEmbedding random_scheme(std::mt19937& rng, const Graph& g, bool orientable) {
  std::vector<std::vector<int>> order(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    order[v] = g.neighbors(v);
    std::shuffle(order[v].begin(), order[v].end(), rng);
  }
  std::vector<int> sig(g.edge_count(), 1);
  if (!orientable)
    for (int& s : sig) s = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
  return embedding_from_neighbor_orders(g, order, sig);
}

/// Bipartite graph with |A| = a, |B| = b and every B-degree at most 4.
inline std::pair<Graph, Bipartition> random_bipartite(std::mt19937& rng, int a, int b) {
  Bipartition p;
  for (int v = 0; v < a; ++v) p.part_a.push_back(v);
  for (int v = a; v < a + b; ++v) p.part_b.push_back(v);
  std::vector<Edge> edges;
  for (int v : p.part_b) {
    std::vector<int> pool = p.part_a;
    std::shuffle(pool.begin(), pool.end(), rng);
    const int d = std::uniform_int_distribution<int>(0, std::min(4, a))(rng);
    for (int i = 0; i < d; ++i) edges.push_back({pool[i], v});
  }
  return {Graph(a + b, edges), p};
}

/// Exhaustive search over all sequences of distinct B vertices.
inline bool brute_force_ordered_exists(const Graph& g, const VertexSet& part_b, int s) {
  VertexSet seq;
  std::vector<char> used(g.vertex_count(), 0);
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(seq.size()) == s) return true;
    for (int v : part_b) {
      if (used[v]) continue;
      seq.push_back(v);
      used[v] = 1;
      const bool ok = is_ordered_sequence(g, seq) && rec();
      seq.pop_back();
      used[v] = 0;
      if (ok) return true;
    }
    return false;
  };
  return rec();
}

/// Planar embedding of the cycle 0-1-...-(t-1): two faces of length t.
inline PseudoEmbedding planar_cycle(int t) {
  std::vector<Edge> edges;
  for (int v = 0; v < t; ++v) edges.push_back({std::min(v, (v + 1) % t), std::max(v, (v + 1) % t)});
  const Graph g(t, edges);
  std::vector<std::vector<int>> order(t);
  for (int v = 0; v < t; ++v) order[v] = {(v + t - 1) % t, (v + 1) % t};
  return embedding_from_neighbor_orders(g, order);
}

}  // namespace emax::support
