#include "twmis/graph.hpp"

#include <algorithm>
#include <string>

#include "twmis/errors.hpp"

namespace twmis {

Graph::Graph(Vertex n) {
  if (n < 0) throw ContractViolation("Graph: negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
  labels_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) labels_[static_cast<std::size_t>(v)] = v;
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (!g.contains(u) || !g.contains(v)) {
      throw ContractViolation("Graph::from_edges: endpoint out of range in edge (" +
                              std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    if (u == v) throw ContractViolation("Graph::from_edges: self-loop at " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t twice_m = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice_m += list.size();
  }
  g.edge_count_ = twice_m / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void require_vertices_of(const Graph& g, const VertexSet& s, const char* where) {
  if (!s.empty() && (s.front() < 0 || s.back() >= g.vertex_count())) {
    throw ContractViolation(std::string(where) + ": vertex set is not a subset of V(G)");
  }
}

Graph induced_subgraph(const Graph& g, const VertexSet& subset) {
  require_vertices_of(g, subset, "induced_subgraph");
  std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    local[static_cast<std::size_t>(subset[i])] = static_cast<Vertex>(i);
  }
  Graph sub(static_cast<Vertex>(subset.size()));
  std::size_t twice_m = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    auto& list = sub.adj_[i];
    for (Vertex w : g.neighbors(subset[i])) {
      Vertex lw = local[static_cast<std::size_t>(w)];
      if (lw >= 0) list.push_back(lw);
    }
    // neighbours of g are sorted and `local` is monotone on subset, so list is sorted
    twice_m += list.size();
    sub.labels_[i] = subset[i];
  }
  sub.edge_count_ = twice_m / 2;
  return sub;
}

Graph remove_vertices(const Graph& g, const VertexSet& removed) {
  return induced_subgraph(g, VertexSet::range(g.vertex_count()).minus(removed));
}

VertexSet lift_to_parent(const Graph& sub, const VertexSet& local) {
  require_vertices_of(sub, local, "lift_to_parent");
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(sub.label(v));
  return VertexSet(std::move(out));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> parts;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> members;
    seen[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    parts.emplace_back(std::move(members));
  }
  return parts;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  require_vertices_of(g, s, "is_independent_set");
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (w > v && s.contains(w)) return false;
    }
  }
  return true;
}

bool has_consistent_structure(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto list = g.neighbors(v);
    if (!std::is_sorted(list.begin(), list.end())) return false;
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) return false;
    for (Vertex w : list) {
      if (w == v || !g.contains(w) || !g.has_edge(w, v)) return false;
    }
  }
  return true;
}

}  // namespace twmis
