#include <random>

#include "../oracles.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "twmis/errors.hpp"
#include "twmis/generators.hpp"
#include "twmis/solvers.hpp"
#include "twmis/transforms.hpp"

using namespace testing;

namespace {

Graph random_graph(Vertex n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("exact_mis_bruteforce") {
  CHECK(exact_mis_bruteforce(cycle_graph(5)).size() == 2);
  CHECK(exact_mis_bruteforce(complete_graph(4)).size() == 1);
  CHECK(exact_mis_bruteforce(Graph(7)).size() == 7);
  CHECK(exact_mis_bruteforce(Graph(0)).size() == 0);
  CHECK_THROWS_AS(exact_mis_bruteforce(Graph(31)), BoxRefusal);
  CHECK_THROWS_AS(exact_mis_bruteforce(Graph(65), 100), BoxRefusal);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(18, 0.1 + 0.02 * static_cast<double>(seed % 20), seed);
    auto r = exact_mis_bruteforce(g);
    CHECK(is_independent_set(g, r.vertices));
    CHECK(static_cast<int>(r.size()) == oracle::alpha(g));
  }
  Graph big = random_graph(60, 0.15, 3);
  CHECK(is_independent_set(big, exact_mis_bruteforce(big, 64).vertices));
}

TEST_CASE("exact_mis_td_dp") {
  Graph p4 = path_graph(4);
  CHECK(exact_mis_td_dp(p4, make_nice(path_td(4), p4)).size() == 2);
  CHECK_THROWS_AS(exact_mis_td_dp(p4, path_td(4)), ContractViolation);

  std::vector<Edge> tree_edges;
  for (Vertex v = 1; v < 15; ++v) tree_edges.emplace_back((v - 1) / 2, v);
  Graph tree = Graph::from_edges(15, tree_edges);
  TreeDecomposition tree_td;
  for (Vertex v = 1; v < 15; ++v) tree_td.add_node({(v - 1) / 2, v});
  for (Vertex v = 2; v < 15; ++v) {
    Vertex parent = (v - 1) / 2;
    if (parent > 0) tree_td.add_edge(v - 1, parent - 1);
    else if (v == 2) tree_td.add_edge(1, 0);
  }
  REQUIRE(validate_td(tree, tree_td).ok());
  CHECK(exact_mis_td_dp(tree, make_nice(tree_td, tree)).size() == exact_mis_bruteforce(tree).size());

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = gen_partial_ktree(25, 3, 0.6, seed);
    auto r = exact_mis_td_dp(inst.graph, make_nice(inst.td, inst.graph));
    CHECK(is_independent_set(inst.graph, r.vertices));
    CHECK(r.size() == exact_mis_bruteforce(inst.graph).size());
  }
  auto wide = gen_partial_ktree(30, 8, 0.5, 1);
  CHECK_THROWS_AS(exact_mis_td_dp(wide.graph, make_nice(wide.td, wide.graph), 5), BoxRefusal);
}

TEST_CASE("greedy_degeneracy") {
  CHECK(greedy_degeneracy(complete_graph(5)).size() == 1);
  CHECK(greedy_degeneracy(path_graph(4)).vertices == VertexSet{0, 2});
  CHECK(greedy_degeneracy(Graph(6)).size() == 6);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto inst = gen_partial_ktree(40, 1 + static_cast<int>(seed % 5), 0.7, seed);
    auto r = greedy_degeneracy(inst.graph);
    CHECK(is_independent_set(inst.graph, r.vertices));
    const auto w1 = static_cast<std::size_t>(inst.td.width() + 1);
    CHECK(r.size() * w1 >= 40);
  }
}

TEST_CASE("box_exact") {
  BlackBox box = box_exact(30);
  CHECK(box.run(cycle_graph(5)).size() == 2);
  CHECK(box.ratio(10) == 10);
  CHECK(box.ratio(1) == 2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_graph(14, 0.3, seed + 100);
    CHECK(static_cast<int>(box.run(g).size()) == oracle::alpha(g));
  }
  CHECK_THROWS_AS(box_exact(10).run(Graph(11)), BoxRefusal);
}

TEST_CASE("box_clique_removal") {
  BlackBox box = box_clique_removal();
  CHECK(box.run(Graph(8)).size() == 8);
  CHECK(box.run(complete_graph(8)).size() == 1);
  CHECK(box.ratio(20) == 4);
  CHECK(box.ratio(2) == 2);
  CHECK(box.ratio(1) == 2);
  int met = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = random_graph(20, 0.3, seed);
    auto r = box.run(g);
    CHECK(is_independent_set(g, r.vertices));
    if (static_cast<std::int64_t>(r.size()) * 20 >= oracle::alpha(g) * box.ratio(20)) ++met;
  }
  CHECK(met >= 190);
}

TEST_CASE("box names") {
  CHECK(box_from_name("exact:12")->name == "exact:12");
  CHECK(box_from_name("clique-removal").has_value());
  CHECK(box_from_name("exact").has_value());
  CHECK_FALSE(box_from_name("exact:").has_value());
  CHECK_FALSE(box_from_name("feige").has_value());
}

TEST_CASE("class split baseline") {
  auto inst = gen_partial_ktree(30, 4, 0.6, 8);
  auto exact = class_split_baseline(inst.graph, inst.td, 16);
  CHECK(exact.classes == 1);
  CHECK(exact.solution.size() == exact_mis_bruteforce(inst.graph).size());
  auto split = class_split_baseline(inst.graph, inst.td, 2);
  CHECK(split.classes >= 3);
  CHECK(is_independent_set(inst.graph, split.solution.vertices));
  CHECK(split.solution.size() * static_cast<std::size_t>(split.classes) >= exact.solution.size());
}
