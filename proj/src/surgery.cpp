#include "twmis/surgery.hpp"

#include <algorithm>
#include <string>

#include "twmis/errors.hpp"

namespace twmis {
namespace {

std::vector<Vertex> local_index(Vertex n, const VertexSet& members) {
  std::vector<Vertex> local(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[static_cast<std::size_t>(members[i])] = static_cast<Vertex>(i);
  return local;
}

// Removes empty-bag leaves (and an empty root with a single child) until none is left.
TreeDecomposition prune_empty_ends(const TreeDecomposition& td) {
  auto rt = rooted_view(td);
  const std::size_t count = static_cast<std::size_t>(td.node_count());
  std::vector<Node> parent = rt.parent;
  std::vector<int> child_count(count);
  for (std::size_t t = 0; t < count; ++t) child_count[t] = static_cast<int>(rt.children[t].size());
  std::vector<char> alive(count, 1);
  Node root = rt.root;
  std::vector<Node> work;
  for (Node t = 0; t < td.node_count(); ++t) work.push_back(t);
  while (!work.empty()) {
    Node t = work.back();
    work.pop_back();
    auto ti = static_cast<std::size_t>(t);
    if (!alive[ti] || !td.bag(t).empty()) continue;
    if (child_count[ti] == 0 && t != root) {
      alive[ti] = 0;
      Node p = parent[ti];
      --child_count[static_cast<std::size_t>(p)];
      work.push_back(p);
    } else if (t == root && child_count[ti] == 1) {
      alive[ti] = 0;
      for (Node c : td.neighbors(t)) {
        if (alive[static_cast<std::size_t>(c)] && parent[static_cast<std::size_t>(c)] == t) {
          root = c;
          parent[static_cast<std::size_t>(c)] = -1;
          work.push_back(c);
        }
      }
    }
  }
  std::vector<Node> id(count, -1);
  TreeDecomposition out;
  for (std::size_t t = 0; t < count; ++t) {
    if (alive[t]) id[t] = out.add_node(td.bag(static_cast<Node>(t)));
  }
  for (std::size_t t = 0; t < count; ++t) {
    if (alive[t] && parent[t] >= 0) out.add_edge(id[static_cast<std::size_t>(parent[t])], id[t]);
  }
  out.set_root(id[static_cast<std::size_t>(root)]);
  return out;
}

void require_branch_union(const TreeDecomposition& td, const VertexSet& q, const char* where) {
  if (branch_bag_union(td) != q) {
    throw ContractViolation(std::string(where) + ": Q is not the union of the branch-node bags");
  }
}

}  // namespace

ChopResult chop_subtrees(const Graph& g, const TreeDecomposition& td, int max_leaves) {
  if (max_leaves < 1) throw ContractViolation("chop_subtrees: leaf bound must be at least 1");
  require_valid(g, td);
  auto rt = rooted_view(td);
  const std::size_t count = static_cast<std::size_t>(td.node_count());
  const auto post = rt.postorder();
  std::vector<char> alive(count, 1);
  std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<std::size_t> leaves_below(count, 0);

  ChopResult result;
  result.input_leaves = rt.leaves().size();
  std::vector<std::pair<Node, std::vector<Node>>> pieces;  // (root, nodes)

  auto collect = [&](Node top) {
    std::vector<Node> nodes;
    std::vector<Node> stack{top};
    while (!stack.empty()) {
      Node t = stack.back();
      stack.pop_back();
      nodes.push_back(t);
      for (Node c : rt.children[static_cast<std::size_t>(t)]) {
        if (alive[static_cast<std::size_t>(c)]) stack.push_back(c);
      }
    }
    return nodes;
  };

  std::vector<Vertex> cut;
  while (true) {
    for (Node t : post) {
      auto ti = static_cast<std::size_t>(t);
      if (!alive[ti]) continue;
      std::size_t sum = 0;
      bool has_child = false;
      for (Node c : rt.children[ti]) {
        if (alive[static_cast<std::size_t>(c)]) {
          has_child = true;
          sum += leaves_below[static_cast<std::size_t>(c)];
        }
      }
      leaves_below[ti] = has_child ? sum : 1;
    }
    if (leaves_below[static_cast<std::size_t>(rt.root)] <= static_cast<std::size_t>(max_leaves)) break;
    Node chosen = -1;
    for (Node t : post) {
      if (alive[static_cast<std::size_t>(t)] && leaves_below[static_cast<std::size_t>(t)] > static_cast<std::size_t>(max_leaves)) {
        chosen = t;
        break;
      }
    }
    ++result.iterations;
    for (Vertex v : td.bag(chosen)) {
      if (!removed[static_cast<std::size_t>(v)]) {
        removed[static_cast<std::size_t>(v)] = 1;
        cut.push_back(v);
      }
    }
    for (Node c : rt.children[static_cast<std::size_t>(chosen)]) {
      if (alive[static_cast<std::size_t>(c)]) pieces.emplace_back(c, collect(c));
    }
    for (Node t : collect(chosen)) alive[static_cast<std::size_t>(t)] = 0;
    if (chosen == rt.root) break;
  }
  if (alive[static_cast<std::size_t>(rt.root)]) pieces.emplace_back(rt.root, collect(rt.root));
  result.removed = VertexSet(std::move(cut));

  // which piece holds each surviving vertex
  std::vector<int> piece_of(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    for (Node t : pieces[p].second) {
      for (Vertex v : td.bag(t)) {
        if (!removed[static_cast<std::size_t>(v)]) piece_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
      }
    }
  }

  Graph rest = remove_vertices(g, result.removed);
  for (const VertexSet& local_component : connected_components(rest)) {
    VertexSet component = lift_to_parent(rest, local_component);
    const auto& [piece_root, nodes] = pieces[static_cast<std::size_t>(piece_of[static_cast<std::size_t>(component.front())])];
    auto local = local_index(g.vertex_count(), component);
    std::vector<Node> node_id(count, -1);
    TreeDecomposition piece_td;
    std::vector<Node> sorted_nodes = nodes;
    std::sort(sorted_nodes.begin(), sorted_nodes.end());
    for (Node t : sorted_nodes) {
      std::vector<Vertex> ids;
      for (Vertex v : td.bag(t)) {
        Vertex lv = local[static_cast<std::size_t>(v)];
        if (lv >= 0) ids.push_back(lv);
      }
      node_id[static_cast<std::size_t>(t)] = piece_td.add_node(VertexSet(std::move(ids)));
    }
    for (Node t : sorted_nodes) {
      Node p = rt.parent[static_cast<std::size_t>(t)];
      if (t != piece_root && p >= 0) {
        piece_td.add_edge(node_id[static_cast<std::size_t>(p)], node_id[static_cast<std::size_t>(t)]);
      }
    }
    piece_td.set_root(node_id[static_cast<std::size_t>(piece_root)]);
    result.parts.push_back({induced_subgraph(g, component), prune_empty_ends(piece_td)});
  }
  return result;
}

std::vector<Node> branch_nodes(const TreeDecomposition& td) {
  std::vector<Node> out;
  for (Node t = 0; t < td.node_count(); ++t) {
    if (td.degree(t) >= 3) out.push_back(t);
  }
  return out;
}

VertexSet branch_bag_union(const TreeDecomposition& td) {
  std::vector<Vertex> ids;
  for (Node t : branch_nodes(td)) {
    const auto& bag = td.bag(t);
    ids.insert(ids.end(), bag.begin(), bag.end());
  }
  return VertexSet(std::move(ids));
}

InducedPath path_decomp_minus_q(const TreeDecomposition& td, const VertexSet& q, const Graph& c) {
  require_branch_union(td, q, "path_decomp_minus_q");
  InducedPath out;
  const VertexSet keep = VertexSet::range(c.vertex_count()).minus(q);
  out.graph = induced_subgraph(c, keep);
  auto local = local_index(c.vertex_count(), keep);

  const std::size_t count = static_cast<std::size_t>(td.node_count());
  std::vector<char> usable(count, 0);
  for (Node t = 0; t < td.node_count(); ++t) usable[static_cast<std::size_t>(t)] = td.degree(t) < 3;
  auto usable_degree = [&](Node t) {
    int d = 0;
    for (Node x : td.neighbors(t)) d += usable[static_cast<std::size_t>(x)];
    return d;
  };
  std::vector<char> seen(count, 0);
  for (Node start = 0; start < td.node_count(); ++start) {
    if (!usable[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)]) continue;
    // find an end of this path
    Node end = start, previous = -1;
    while (usable_degree(end) == 2) {
      Node next = -1;
      for (Node x : td.neighbors(end)) {
        if (usable[static_cast<std::size_t>(x)] && x != previous) next = x;
      }
      if (next == start) break;  // cannot happen in a tree
      previous = end;
      end = next;
    }
    previous = -1;
    for (Node t = end; t != -1;) {
      seen[static_cast<std::size_t>(t)] = 1;
      std::vector<Vertex> ids;
      for (Vertex v : td.bag(t)) {
        Vertex lv = local[static_cast<std::size_t>(v)];
        if (lv >= 0) ids.push_back(lv);
      }
      out.path.bags.emplace_back(std::move(ids));
      Node next = -1;
      for (Node x : td.neighbors(t)) {
        if (usable[static_cast<std::size_t>(x)] && x != previous) next = x;
      }
      previous = t;
      t = next;
    }
  }
  return out;
}

InducedTree contract_to_branch_td(const TreeDecomposition& td, const VertexSet& q, const Graph& c) {
  if (q.empty()) throw ContractViolation("contract_to_branch_td: Q is empty");
  require_branch_union(td, q, "contract_to_branch_td");
  InducedTree out;
  out.graph = induced_subgraph(c, q);
  auto local = local_index(c.vertex_count(), q);
  auto to_local = [&](const VertexSet& bag) {
    std::vector<Vertex> ids;
    for (Vertex v : bag) {
      Vertex lv = local[static_cast<std::size_t>(v)];
      if (lv >= 0) ids.push_back(lv);
    }
    return VertexSet(std::move(ids));
  };

  const auto branches = branch_nodes(td);
  std::vector<Node> id(static_cast<std::size_t>(td.node_count()), -1);
  for (Node u : branches) id[static_cast<std::size_t>(u)] = out.td.add_node(to_local(td.bag(u)));
  for (Node u : branches) {
    for (Node first : td.neighbors(u)) {
      Node previous = u, t = first;
      bool internal = false;
      while (td.degree(t) == 2) {
        Node next = td.neighbors(t)[0] == previous ? td.neighbors(t)[1] : td.neighbors(t)[0];
        previous = t;
        t = next;
        internal = true;
      }
      if (td.degree(t) < 3 || t < u) continue;  // pendant path, or seen from the other end
      Node a = id[static_cast<std::size_t>(u)];
      Node b = id[static_cast<std::size_t>(t)];
      if (internal) {
        Node merged = out.td.add_node(to_local(td.bag(u).unite(td.bag(t))));
        out.td.add_edge(a, merged);
        out.td.add_edge(merged, b);
      } else {
        out.td.add_edge(a, b);
      }
    }
  }
  out.td.set_root(0);
  return out;
}

}  // namespace twmis
