#include <cmath>
#include <sstream>

#include "../oracles.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "twmis/errors.hpp"
#include "twmis/generators.hpp"
#include "twmis/surgery.hpp"
#include "twmis/transforms.hpp"

using namespace testing;

namespace {

bool every_leaf_unique(const TreeDecomposition& td, Vertex n) {
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (const auto& bag : td.bags()) {
    for (Vertex v : bag) ++count[static_cast<std::size_t>(v)];
  }
  for (Node leaf : rooted_leaves(td)) {
    bool found = false;
    for (Vertex v : td.bag(leaf)) found = found || count[static_cast<std::size_t>(v)] == 1;
    if (!found) return false;
  }
  return true;
}

TreeDecomposition star_td(VertexSet center, std::vector<VertexSet> legs) {
  TreeDecomposition td;
  td.add_node(std::move(center));
  for (auto& leg : legs) td.add_edge(0, td.add_node(std::move(leg)));
  td.set_root(0);
  return td;
}

}  // namespace

TEST_CASE("validate_td examples") {
  auto k3 = validate_td(complete_graph(3), single_bag(3));
  CHECK(k3.ok());
  CHECK(k3.width == 2);

  auto p3 = validate_td(path_graph(3), path_td(3));
  CHECK(p3.ok());
  CHECK(p3.width == 1);

  TreeDecomposition broken;
  broken.add_node({0});
  broken.add_node({1, 2});
  broken.add_edge(0, 1);
  auto bad = validate_td(path_graph(3), broken);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.covers_edges);
  REQUIRE(bad.uncovered_edge.has_value());
  CHECK(*bad.uncovered_edge == Edge{0, 1});

  TreeDecomposition split;
  split.add_node({0, 1});
  split.add_node({1, 2});
  split.add_node({0, 2});
  split.add_edge(0, 1);
  split.add_edge(1, 2);
  auto gap = validate_td(complete_graph(3), split);
  CHECK_FALSE(gap.connected_occurrences);
  CHECK(gap.disconnected_vertex == 0);
  CHECK_FALSE(oracle::valid_decomposition(complete_graph(3), split));
}

TEST_CASE("td file round trip") {
  auto inst = gen_partial_ktree(25, 3, 0.5, 4);
  std::ostringstream out;
  write_pace_td(out, inst.td, inst.graph.vertex_count());
  TdFile back = parse_td(out.str());
  CHECK(back.vertex_count == 25);
  CHECK(back.td.bags() == inst.td.bags());
  CHECK(back.td.edges() == inst.td.edges());
  CHECK_THROWS_AS(parse_td("s td 1 2 3\nb 1 1 9\n"), ParseError);
}

TEST_CASE("make_nice") {
  TreeDecomposition k3 = make_nice(single_bag(3), complete_graph(3));
  CHECK(is_nice(k3));
  CHECK(k3.node_count() <= 12);
  CHECK(validate_td(complete_graph(3), k3).ok());

  TreeDecomposition again = make_nice(k3, complete_graph(3));
  CHECK(is_nice(again));
  CHECK(again.width() == k3.width());

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto inst = gen_partial_ktree(30, 3, 0.6, seed);
    TreeDecomposition nice = make_nice(inst.td, inst.graph);
    CHECK(validate_td(inst.graph, nice).ok());
    CHECK(oracle::valid_decomposition(inst.graph, nice));
    CHECK(is_nice(nice));
    CHECK(nice.node_count() <= 120);
    CHECK(nice.width() == inst.td.width());
  }

  TreeDecomposition edgeless;
  for (Vertex v = 0; v < 4; ++v) edgeless.add_node({v});
  edgeless.add_edge(0, 1);
  edgeless.add_edge(1, 2);
  edgeless.add_edge(1, 3);
  TreeDecomposition n4 = make_nice(edgeless, Graph(4));
  CHECK(validate_td(Graph(4), n4).ok());
  CHECK(n4.node_count() <= 16);

  CHECK_THROWS_AS(make_nice(path_td(2), path_graph(3)), InvalidDecomposition);
}

TEST_CASE("make_leaf_unique") {
  TreeDecomposition one;
  one.add_node({0});
  one.set_root(0);
  retag_nice(one);
  TreeDecomposition same = make_leaf_unique(one, Graph(1));
  CHECK(same.node_count() == 1);

  // a join whose second leaf only repeats the join bag
  TreeDecomposition td;
  Node root = td.add_node({0, 1});
  Node a = td.add_node({0, 1});
  Node b = td.add_node({0, 1});
  Node c = td.add_node({0, 1, 2});
  td.add_edge(root, a);
  td.add_edge(root, b);
  td.add_edge(b, c);
  td.set_root(root);
  retag_nice(td);
  REQUIRE(is_nice(td));
  Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  TreeDecomposition fixed = make_leaf_unique(td, g);
  CHECK(is_nice(fixed));
  CHECK(validate_td(g, fixed).ok());
  CHECK(every_leaf_unique(fixed, 3));
  CHECK(fixed.node_count() < td.node_count());

  TreeDecomposition chain = make_nice(path_td(3), Graph(3));
  CHECK(every_leaf_unique(make_leaf_unique(chain, Graph(3)), 3));

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto inst = gen_partial_ktree(40, 4, 0.5, seed);
    TreeDecomposition nice = make_nice(inst.td, inst.graph);
    TreeDecomposition unique = make_leaf_unique(nice, inst.graph);
    CHECK(is_nice(unique));
    CHECK(oracle::valid_decomposition(inst.graph, unique));
    CHECK(every_leaf_unique(unique, 40));
    CHECK(unique.width() == nice.width());
  }
  CHECK_THROWS_AS(make_leaf_unique(path_td(3), path_graph(3)), ContractViolation);
}

TEST_CASE("make_nice_path") {
  PathDecomposition p3{{{0, 1}, {1, 2}}, false};
  PathDecomposition nice = make_nice_path(p3, path_graph(3));
  std::vector<VertexSet> expected{{0}, {0, 1}, {1}, {1, 2}, {2}, {}};
  CHECK(nice.bags == expected);
  CHECK(is_nice_path(nice));

  PathDecomposition one{{{0}}, false};
  CHECK(make_nice_path(one, Graph(1)).bags == std::vector<VertexSet>{{0}, {}});

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = gen_interval_graph(20, 5, seed);
    PathDecomposition out = make_nice_path(inst.path, inst.graph);
    CHECK(out.bags.size() == 40);
    CHECK(is_nice_path(out));
    CHECK(oracle::valid_path(inst.graph, out));
    CHECK(out.width() == inst.path.width());
  }
}

TEST_CASE("reduce_depth") {
  Graph p65 = path_graph(65);
  TreeDecomposition line = path_td(65);
  REQUIRE(line.node_count() == 64);
  TreeDecomposition flat = reduce_depth(line, p65);
  CHECK(validate_td(p65, flat).ok());
  CHECK(flat.width() <= 5);
  CHECK(decomposition_depth(flat) <= 4 * 7);

  TreeDecomposition single = reduce_depth(single_bag(3), complete_graph(3));
  CHECK(decomposition_depth(single) == 0);
  CHECK(single.width() == 2);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = gen_partial_ktree(100, 4, 0.5, seed);
    TreeDecomposition nice = make_nice(inst.td, inst.graph);
    TreeDecomposition r = reduce_depth(nice, inst.graph);
    CHECK(oracle::valid_decomposition(inst.graph, r));
    CHECK(r.width() <= 14);
    double bound = 4.0 * (1.0 + std::log2(static_cast<double>(nice.node_count())));
    CHECK(decomposition_depth(r) <= bound);
  }
}

TEST_CASE("chop_subtrees") {
  SUBCASE("few leaves: nothing removed") {
    auto inst = gen_partial_ktree(20, 2, 0.5, 3);
    TreeDecomposition nice = make_nice(inst.td, inst.graph);
    auto chop = chop_subtrees(inst.graph, nice, static_cast<int>(rooted_leaves(nice).size()));
    CHECK(chop.removed.empty());
    CHECK(chop.iterations == 0);
    CHECK(chop.parts.size() == connected_components(inst.graph).size());
  }
  SUBCASE("binary tree of singletons") {
    TreeDecomposition td;
    for (Vertex v = 0; v < 15; ++v) td.add_node({v});
    for (Node t = 1; t < 15; ++t) td.add_edge((t - 1) / 2, t);
    td.set_root(0);
    Graph g(15);
    auto chop = chop_subtrees(g, td, 2);
    CHECK(chop.iterations <= 4);
    CHECK(chop.removed.size() <= 4);
    std::size_t covered = chop.removed.size();
    for (const auto& part : chop.parts) {
      CHECK(rooted_leaves(part.td).size() <= 2);
      CHECK(validate_td(part.graph, part.td).ok());
      covered += static_cast<std::size_t>(part.graph.vertex_count());
    }
    CHECK(covered == 15);
  }
  SUBCASE("random instances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto inst = gen_partial_ktree(60, 3, 0.6, seed);
      TreeDecomposition nice = make_leaf_unique(make_nice(inst.td, inst.graph), inst.graph);
      const std::size_t leaves = rooted_leaves(nice).size();
      auto chop = chop_subtrees(inst.graph, nice, 4);
      CHECK(chop.removed.size() * 4 <= 4 * leaves);
      std::vector<int> owner(60, -1);
      for (Vertex v : chop.removed) owner[static_cast<std::size_t>(v)] = 0;
      for (std::size_t p = 0; p < chop.parts.size(); ++p) {
        const auto& part = chop.parts[p];
        CHECK(rooted_leaves(part.td).size() <= 4);
        CHECK(oracle::valid_decomposition(part.graph, part.td));
        CHECK(part.td.width() <= 3);
        for (Vertex v : part.graph.labels()) {
          CHECK(owner[static_cast<std::size_t>(v)] == -1);
          owner[static_cast<std::size_t>(v)] = static_cast<int>(p) + 1;
        }
      }
      for (int o : owner) CHECK(o >= 0);
      for (auto [u, v] : inst.graph.edges()) {
        int a = owner[static_cast<std::size_t>(u)], b = owner[static_cast<std::size_t>(v)];
        CHECK((a == 0 || b == 0 || a == b));
      }
    }
  }
  CHECK_THROWS_AS(chop_subtrees(path_graph(3), path_td(3), 0), ContractViolation);
}

TEST_CASE("branch_bag_union") {
  CHECK(branch_bag_union(path_td(6)).empty());
  auto star = star_td({0, 1}, {{0, 2}, {1, 3}, {0, 4}});
  CHECK(branch_bag_union(star) == VertexSet{0, 1});
  CHECK(branch_nodes(star) == std::vector<Node>{0});
}

TEST_CASE("path_decomp_minus_q") {
  Graph p5 = path_graph(5);
  auto plain = path_decomp_minus_q(path_td(5), {}, p5);
  CHECK(plain.graph.vertex_count() == 5);
  CHECK(plain.path.bags.size() == 4);
  CHECK(validate_path(plain.graph, plain.path).ok());

  // spider: center {0}, legs 0-1-2, 0-3-4, 0-5-6
  Graph spider = Graph::from_edges(7, std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  TreeDecomposition td;
  td.add_node({0});
  for (Vertex a : {1, 3, 5}) {
    Node x = td.add_node({0, a});
    Node y = td.add_node({a, a + 1});
    td.add_edge(0, x);
    td.add_edge(x, y);
  }
  auto legs = path_decomp_minus_q(td, {0}, spider);
  CHECK(legs.graph.vertex_count() == 6);
  CHECK(legs.path.bags.size() == 6);
  CHECK(oracle::valid_path(legs.graph, legs.path));
  CHECK(legs.path.width() <= 1);
  CHECK_THROWS_AS(path_decomp_minus_q(td, {1}, spider), ContractViolation);
}

TEST_CASE("contract_to_branch_td") {
  auto star = star_td({0, 1}, {{0, 2}, {1, 3}, {0, 4}});
  Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {0, 4}});
  auto one = contract_to_branch_td(star, {0, 1}, g);
  CHECK(one.td.node_count() == 1);
  CHECK(one.graph.vertex_count() == 2);
  CHECK(validate_td(one.graph, one.td).ok());
  CHECK_THROWS_AS(contract_to_branch_td(path_td(4), {}, path_graph(4)), ContractViolation);

  // two branch nodes joined through two degree-2 nodes
  Graph h(10);
  TreeDecomposition td;
  Node u = td.add_node({0});
  Node m1 = td.add_node({1});
  Node m2 = td.add_node({2});
  Node v = td.add_node({3});
  td.add_edge(u, m1);
  td.add_edge(m1, m2);
  td.add_edge(m2, v);
  for (Vertex x : {4, 5}) td.add_edge(u, td.add_node({x}));
  for (Vertex x : {6, 7}) td.add_edge(v, td.add_node({x}));
  td.add_node({8});
  td.add_edge(6, 8);  // lengthen a pendant leg
  td.add_edge(8, td.add_node({9}));
  auto two = contract_to_branch_td(td, {0, 3}, h);
  CHECK(two.td.node_count() == 3);
  CHECK(validate_td(two.graph, two.td).ok());

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = gen_partial_ktree(50, 3, 0.7, seed);
    TreeDecomposition nice = make_leaf_unique(make_nice(inst.td, inst.graph), inst.graph);
    auto chop = chop_subtrees(inst.graph, nice, 8);
    for (const auto& part : chop.parts) {
      VertexSet q = branch_bag_union(part.td);
      if (q.empty()) continue;
      auto c = contract_to_branch_td(part.td, q, part.graph);
      CHECK(oracle::valid_decomposition(c.graph, c.td));
      CHECK(c.td.max_bag_size() <= 2 * part.td.max_bag_size());
      CHECK(static_cast<std::size_t>(c.td.node_count()) <= 2 * branch_nodes(part.td).size());
    }
  }
}
