#pragma once

#include "twmis/decomposition.hpp"
#include "twmis/graph.hpp"

namespace twmis {

/// Smooth decomposition of the same width ω: every bag has exactly ω+1 vertices and
/// adjacent bags share exactly ω of them. Such a decomposition has n - ω nodes.
/// Throws InvalidDecomposition if td is not valid for g.
TreeDecomposition make_smooth(const TreeDecomposition& td, const Graph& g);

/// Nice rooted decomposition of the same width with at most 4n nodes, kind-tagged.
///
/// Built from the smooth decomposition: each tree edge becomes a forget followed by
/// an introduce, and a node with d children becomes a chain of d-1 join nodes. With
/// N = n - ω smooth nodes and L leaves this gives L + (L-1) + 2(N-1) <= 4n nodes.
/// For the empty graph the result is a single empty leaf.
TreeDecomposition make_nice(const TreeDecomposition& td, const Graph& g);

/// Deletes leaves that own no private vertex until every leaf bag contains a vertex
/// occurring in no other bag. A join left with one child is contracted into it.
/// Width never grows and the node count only shrinks. Throws ContractViolation if td
/// is not nice.
TreeDecomposition make_leaf_unique(const TreeDecomposition& td, const Graph& g);

/// Nice path decomposition with exactly 2n bags and the same width: vertices are
/// introduced and forgotten one at a time (smallest identifier first), the leading
/// empty bag is dropped and the trailing empty bag is kept.
PathDecomposition make_nice_path(const PathDecomposition& pd, const Graph& g);

/// Rooted decomposition of depth O(log γ) and width at most 3ω+2, γ = node count.
///
/// Recursively splits the decomposition tree. A piece of the tree has at most two
/// boundary nodes; pieces with one boundary node are split at a centroid, pieces with
/// two at the weighted median of the path between them. The new bag for a piece is
/// the splitting bag plus every vertex the piece shares with the rest of the tree
/// (held by at most two boundary bags). Depth is at most 2·log2(γ) + 2.
TreeDecomposition reduce_depth(const TreeDecomposition& td, const Graph& g);

}  // namespace twmis
