#include "twmis/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "twmis/errors.hpp"

namespace twmis {
namespace {

void check_params(Vertex n, int k, double keep_prob, const char* who) {
  if (k < 1 || static_cast<Vertex>(k) >= n) {
    throw ContractViolation(std::string(who) + ": need 1 <= k < n");
  }
  if (!(keep_prob >= 0.0 && keep_prob <= 1.0)) {
    throw ContractViolation(std::string(who) + ": keep_prob must lie in [0, 1]");
  }
}

// Shared k-tree growth. choose_parent picks the bag the new vertex hangs off.
template <class ChooseParent>
std::pair<Graph, std::vector<VertexSet>> grow(Vertex n, int k, double keep_prob,
                                              std::mt19937_64& rng, std::vector<Node>& parent_of,
                                              ChooseParent choose_parent) {
  std::vector<VertexSet> bags;
  std::vector<Edge> edges;
  bags.push_back(VertexSet::range(static_cast<Vertex>(k + 1)));
  parent_of.push_back(-1);
  for (Vertex u = 0; u <= k; ++u) {
    for (Vertex v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
  }
  for (Vertex v = static_cast<Vertex>(k + 1); v < n; ++v) {
    Node host = choose_parent(rng, static_cast<Node>(bags.size()));
    const VertexSet& host_bag = bags[static_cast<std::size_t>(host)];
    std::uniform_int_distribution<std::size_t> drop_pick(0, host_bag.size() - 1);
    Vertex dropped = host_bag[drop_pick(rng)];
    std::vector<Vertex> clique;
    for (Vertex w : host_bag) {
      if (w != dropped) {
        clique.push_back(w);
        edges.emplace_back(w, v);
      }
    }
    clique.push_back(v);
    bags.push_back(VertexSet(std::move(clique)));
    parent_of.push_back(host);
  }
  std::bernoulli_distribution keep(keep_prob);
  std::vector<Edge> kept;
  for (const auto& e : edges) {
    if (keep(rng)) kept.push_back(e);
  }
  return {Graph::from_edges(n, kept), std::move(bags)};
}

}  // namespace

GeneratedInstance gen_partial_ktree(Vertex n, int k, double keep_prob, std::uint64_t seed) {
  check_params(n, k, keep_prob, "gen_partial_ktree");
  std::mt19937_64 rng(seed);
  std::vector<Node> parent_of;
  auto [graph, bags] = grow(n, k, keep_prob, rng, parent_of, [](std::mt19937_64& r, Node count) {
    std::uniform_int_distribution<Node> pick(0, count - 1);
    return pick(r);
  });
  GeneratedInstance out{std::move(graph), {}};
  for (auto& bag : bags) out.td.add_node(std::move(bag));
  for (Node t = 1; t < out.td.node_count(); ++t) out.td.add_edge(parent_of[static_cast<std::size_t>(t)], t);
  out.td.set_root(0);
  return out;
}

GeneratedPathInstance gen_partial_kpath(Vertex n, int k, double keep_prob, std::uint64_t seed) {
  check_params(n, k, keep_prob, "gen_partial_kpath");
  std::mt19937_64 rng(seed);
  std::vector<Node> parent_of;
  auto [graph, bags] = grow(n, k, keep_prob, rng, parent_of,
                            [](std::mt19937_64&, Node count) { return count - 1; });
  return {std::move(graph), PathDecomposition{std::move(bags), false}};
}

GeneratedPathInstance gen_interval_graph(Vertex n, int max_length, std::uint64_t seed) {
  if (n < 1 || max_length < 1) throw ContractViolation("gen_interval_graph: need n >= 1, max_length >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> start_pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> length_pick(1, max_length);
  const int slots = static_cast<int>(n) + max_length;
  std::vector<std::vector<Vertex>> points(static_cast<std::size_t>(slots));
  for (Vertex v = 0; v < n; ++v) {
    int start = start_pick(rng);
    int len = length_pick(rng);
    for (int p = start; p < start + len; ++p) points[static_cast<std::size_t>(p)].push_back(v);
  }
  std::vector<Edge> edges;
  PathDecomposition path;
  for (auto& members : points) {
    if (members.empty()) continue;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
    }
    path.bags.emplace_back(std::move(members));
  }
  return {Graph::from_edges(n, edges), std::move(path)};
}

}  // namespace twmis
