#include <gtest/gtest.h>

#include <sstream>

#include "emax/graph.hpp"
#include "emax/constructions.hpp"

using namespace emax;

TEST(Graph, RejectsLoopsParallelsAndRange) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(Graph(-1), InputError);
}

TEST(Graph, StoresCanonicalSortedEdges) {
  const Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
  ASSERT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[2], (Edge{1, 3}));
  EXPECT_EQ(g.neighbors(1), (VertexSet{0, 3}));
  EXPECT_TRUE(g.adjacent(3, 1));
  EXPECT_FALSE(g.adjacent(2, 3));
}

TEST(Graph, Neighborhoods) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(closed_neighborhood(k4, 2), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(common_neighbors(k4, 0, 1), (VertexSet{2, 3}));
  EXPECT_THROW(common_neighbors(k4, 1, 1), InputError);
  const VertexSet all{0, 1, 2, 3};
  EXPECT_TRUE(is_clique(k4, all));
  const Graph path(3, {{0, 1}, {1, 2}});
  const VertexSet ends{0, 2};
  EXPECT_FALSE(is_clique(path, ends));
  EXPECT_EQ(min_degree(path), 1);
}

TEST(Graph, BipartitionValidation) {
  const auto k = complete_bipartite(2, 3);
  EXPECT_NO_THROW(validate_bipartition(k.graph, k.parts));
  Bipartition bad = k.parts;
  bad.part_a.push_back(bad.part_b.back());
  EXPECT_THROW(validate_bipartition(k.graph, bad), InputError);
  Bipartition missing{{0, 1}, {2, 3}};
  EXPECT_THROW(validate_bipartition(k.graph, missing), InputError);
  const Graph tri = complete_graph(3);
  EXPECT_THROW(validate_bipartition(tri, Bipartition{{0}, {1, 2}}), InputError);
}

TEST(Graph, LocallyHamiltonian) {
  EXPECT_TRUE(is_locally_hamiltonian(complete_graph(4)));
  EXPECT_TRUE(is_locally_hamiltonian(complete_graph(6)));
  // Wheel with a 5-cycle rim: the hub's neighbourhood is the rim, each rim
  // vertex sees a path, so not locally Hamiltonian.
  std::vector<Edge> wheel;
  for (int i = 0; i < 5; ++i) {
    wheel.push_back({0, i + 1});
    wheel.push_back({std::min(i + 1, (i + 1) % 5 + 1), std::max(i + 1, (i + 1) % 5 + 1)});
  }
  EXPECT_FALSE(is_locally_hamiltonian(Graph(6, wheel)));
  EXPECT_FALSE(is_locally_hamiltonian(complete_bipartite(3, 3).graph));
  EXPECT_THROW(is_locally_hamiltonian(complete_graph(12)), PreconditionError);
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(is_k_connected(complete_graph(4), 3));
  EXPECT_FALSE(is_k_connected(complete_graph(3), 3));
  const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(is_k_connected(path, 1));
  EXPECT_FALSE(is_k_connected(path, 2));
  const Graph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_TRUE(is_k_connected(cycle, 2));
  EXPECT_FALSE(is_k_connected(cycle, 3));
  EXPECT_FALSE(is_k_connected(Graph(2), 1));
}

TEST(Graph, BipartiteGenusLowerBound) {
  // K_{3,3}: ceil(9/2) - 6 + 2 = 1.
  const auto k33 = complete_bipartite(3, 3);
  EXPECT_EQ(bipartite_genus_lower_bound(k33.graph, k33.parts), 1);
  const auto k36 = complete_bipartite(3, 6);
  EXPECT_EQ(bipartite_genus_lower_bound(k36.graph, k36.parts), 2);
  const auto k22 = complete_bipartite(2, 2);
  EXPECT_EQ(bipartite_genus_lower_bound(k22.graph, k22.parts), 0);
}

TEST(Graph, UnionAndInducedSubgraph) {
  const Graph u = disjoint_union(complete_graph(3), complete_graph(2));
  EXPECT_EQ(u.vertex_count(), 5);
  EXPECT_EQ(u.edge_count(), 4);
  EXPECT_TRUE(u.adjacent(3, 4));
  const Graph sub = induced_subgraph(complete_graph(5), {1, 3, 4});
  EXPECT_EQ(sub, complete_graph(3));
}

TEST(EdgeList, RoundTrip) {
  const Graph g = k8_minus_c5();
  std::stringstream ss;
  write_edge_list(ss, g);
  EXPECT_EQ(read_edge_list(ss), g);
}

TEST(EdgeList, CommentsAndBlankLines) {
  std::istringstream in("# header\n3 2\n\n0 1  # first\n1 2\n");
  const Graph g = read_edge_list(in);
  EXPECT_EQ(g.edge_count(), 2);
}

TEST(EdgeList, ReportsLineNumbers) {
  std::istringstream bad_token("3 2\n0 1\n1 x\n");
  try {
    read_edge_list(bad_token);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::istringstream short_list("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(short_list), InputError);
  std::istringstream trailing("2 1\n0 1\n1 0\n");
  EXPECT_THROW(read_edge_list(trailing), InputError);
  std::istringstream range("2 1\n0 5\n");
  EXPECT_THROW(read_edge_list(range), InputError);
  std::istringstream dup("3 2\n0 1\n1 0\n");
  EXPECT_THROW(read_edge_list(dup), InputError);
}
