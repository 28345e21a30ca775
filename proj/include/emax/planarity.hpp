#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "emax/graph.hpp"

namespace emax {

inline bool is_planar(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  BoostGraph bg(g.vertex_count());
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace emax
