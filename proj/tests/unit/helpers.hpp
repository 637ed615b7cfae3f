#pragma once

#include <vector>

#include "twmis/decomposition.hpp"
#include "twmis/graph.hpp"

namespace testing {

using namespace twmis;

inline Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

/// Bags {i, i+1} in a line.
inline TreeDecomposition path_td(Vertex n) {
  TreeDecomposition td;
  if (n == 1) {
    td.add_node({0});
  }
  for (Vertex v = 0; v + 1 < n; ++v) {
    Node t = td.add_node({v, v + 1});
    if (t > 0) td.add_edge(t - 1, t);
  }
  td.set_root(0);
  return td;
}

inline TreeDecomposition single_bag(Vertex n) {
  TreeDecomposition td;
  td.add_node(VertexSet::range(n));
  td.set_root(0);
  return td;
}

}  // namespace testing
