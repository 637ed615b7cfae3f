#pragma once

#include <vector>

#include "twmis/decomposition.hpp"
#include "twmis/graph.hpp"

namespace twmis {

/// One connected component of G - X with its own decomposition.
struct ChopPart {
  Graph graph;             // induced on the component; labels point into the input graph
  TreeDecomposition td;    // rooted, in the component's local identifiers
};

struct ChopResult {
  VertexSet removed;       // X
  std::vector<ChopPart> parts;
  int iterations = 0;
  std::size_t input_leaves = 0;
};

/// Cuts a rooted decomposition into pieces with at most `max_leaves` leaves.
///
/// While the remaining tree has more than max_leaves leaves, take the first node in
/// post-order whose subtree has more than max_leaves leaves, move its bag into X and
/// split off the subtrees of its children. The final remainder is kept as a piece too.
/// Every component of G - X lies inside one piece and gets that piece's tree with bags
/// restricted to the component; empty-bag leaves are pruned. |X| <= k·|L|/max_leaves
/// where k is the largest bag size and L the leaf set.
ChopResult chop_subtrees(const Graph& g, const TreeDecomposition& td, int max_leaves);

/// Nodes of undirected degree at least 3, in increasing order.
std::vector<Node> branch_nodes(const TreeDecomposition& td);

/// Union of the bags of all branch nodes.
VertexSet branch_bag_union(const TreeDecomposition& td);

struct InducedPath {
  Graph graph;             // C - Q, labels point into C
  PathDecomposition path;  // in graph's identifiers
};

struct InducedTree {
  Graph graph;             // C[Q], labels point into C
  TreeDecomposition td;    // in graph's identifiers
};

/// Path decomposition of C - Q: delete the branch nodes and the vertices of Q, then
/// concatenate the remaining paths (ordered by smallest node). Width never exceeds
/// the input's. Throws ContractViolation if q is not branch_bag_union(td).
InducedPath path_decomp_minus_q(const TreeDecomposition& td, const VertexSet& q, const Graph& c);

/// Decomposition of C[Q] on the branch nodes of td: each path of degree-2 nodes between
/// two branch nodes u, v becomes one node with bag B_u ∪ B_v; paths hanging off a branch
/// node towards a leaf are dropped. At most 2·(branch count) - 1 nodes, width at most
/// 2·(max bag) - 1. Throws ContractViolation if q is empty or not branch_bag_union(td).
InducedTree contract_to_branch_td(const TreeDecomposition& td, const VertexSet& q, const Graph& c);

}  // namespace twmis
