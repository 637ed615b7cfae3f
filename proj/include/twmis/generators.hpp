#pragma once

#include <cstdint>

#include "twmis/decomposition.hpp"
#include "twmis/graph.hpp"

namespace twmis {

struct GeneratedInstance {
  Graph graph;
  TreeDecomposition td;  // certified: valid for graph, width <= k
};

struct GeneratedPathInstance {
  Graph graph;
  PathDecomposition path;
};

/// Random partial k-tree on n vertices.
///
/// Grows a k-tree from the clique {0..k}: every further vertex is attached to a
/// k-subset of a uniformly chosen existing bag, which yields a new bag. Each edge of
/// the k-tree is then kept independently with probability keep_prob. The k-tree's
/// bags (size k+1) remain a valid decomposition of the thinned graph.
/// Requires 1 <= k < n and 0 <= keep_prob <= 1.
GeneratedInstance gen_partial_ktree(Vertex n, int k, double keep_prob, std::uint64_t seed);

/// Like gen_partial_ktree but every new vertex attaches to the most recent bag, so the
/// bags form a path decomposition of width k.
GeneratedPathInstance gen_partial_kpath(Vertex n, int k, double keep_prob, std::uint64_t seed);

/// Random interval graph: vertex i occupies [start, start + len) on a line of
/// n slots, len uniform in [1, max_length]. The bags are the points of the line.
GeneratedPathInstance gen_interval_graph(Vertex n, int max_length, std::uint64_t seed);

}  // namespace twmis
