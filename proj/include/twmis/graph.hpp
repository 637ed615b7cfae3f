#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "twmis/vertex_set.hpp"

namespace twmis {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted and symmetric, with no self-loops. A graph built by
/// induced_subgraph() remembers, for each of its vertices, the identifier of the
/// same vertex in the graph it was taken from (label()). Graphs are immutable once
/// built and may be shared freely between threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);

  /// Builds a graph from an edge list. Duplicate edges collapse; self-loops and
  /// out-of-range endpoints throw ContractViolation.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex vertex_count() const noexcept { return static_cast<Vertex>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  Vertex degree(Vertex v) const { return static_cast<Vertex>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Identifier of v in the parent graph (identity for a root graph).
  Vertex label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& labels() const noexcept { return labels_; }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  friend Graph induced_subgraph(const Graph& g, const VertexSet& subset);

  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> labels_;
  std::size_t edge_count_ = 0;
};

/// G[S], relabelled to 0..|S|-1 in increasing order of S, with labels pointing back into g.
Graph induced_subgraph(const Graph& g, const VertexSet& subset);

/// G - S.
Graph remove_vertices(const Graph& g, const VertexSet& removed);

/// Translates a set of local vertices of `sub` into identifiers of its parent graph.
VertexSet lift_to_parent(const Graph& sub, const VertexSet& local);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_independent_set(const Graph& g, const VertexSet& s);

/// Checks adjacency symmetry and loop-freeness. Graphs built through this API always
/// pass; the check exists for audits over externally assembled data.
bool has_consistent_structure(const Graph& g);

/// Throws ContractViolation unless every member of s is a vertex of g.
void require_vertices_of(const Graph& g, const VertexSet& s, const char* where);

}  // namespace twmis
