#include "twmis/transforms.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "twmis/errors.hpp"

namespace twmis {
namespace {

// Mutable tree of bags used while reshaping a decomposition.
struct BagTree {
  std::vector<VertexSet> bag;
  std::vector<std::vector<Node>> adj;
  std::vector<char> alive;

  explicit BagTree(const TreeDecomposition& td) {
    bag = td.bags();
    adj.resize(bag.size());
    alive.assign(bag.size(), 1);
    for (Node t = 0; t < td.node_count(); ++t) adj[static_cast<std::size_t>(t)] = td.neighbors(t);
  }

  Node add(VertexSet b) {
    bag.push_back(std::move(b));
    adj.emplace_back();
    alive.push_back(1);
    return static_cast<Node>(bag.size() - 1);
  }

  void link(Node a, Node b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }

  void unlink(Node a, Node b) {
    auto drop = [](std::vector<Node>& list, Node x) {
      list.erase(std::find(list.begin(), list.end(), x));
    };
    drop(adj[static_cast<std::size_t>(a)], b);
    drop(adj[static_cast<std::size_t>(b)], a);
  }

  // Contracts the edge (from, into): `from` disappears, its other neighbours move to `into`.
  void merge_into(Node from, Node into) {
    unlink(from, into);
    for (Node x : adj[static_cast<std::size_t>(from)]) {
      auto& list = adj[static_cast<std::size_t>(x)];
      *std::find(list.begin(), list.end(), from) = into;
      adj[static_cast<std::size_t>(into)].push_back(x);
    }
    adj[static_cast<std::size_t>(from)].clear();
    alive[static_cast<std::size_t>(from)] = 0;
  }

  // Contracts every edge whose one bag is contained in the other.
  void contract_nested() {
    std::deque<Node> work;
    for (Node t = 0; t < static_cast<Node>(bag.size()); ++t) {
      if (alive[static_cast<std::size_t>(t)]) work.push_back(t);
    }
    while (!work.empty()) {
      Node t = work.front();
      work.pop_front();
      if (!alive[static_cast<std::size_t>(t)]) continue;
      bool again = true;
      while (again) {
        again = false;
        for (Node x : adj[static_cast<std::size_t>(t)]) {
          const auto& bt = bag[static_cast<std::size_t>(t)];
          const auto& bx = bag[static_cast<std::size_t>(x)];
          if (bx.is_subset_of(bt)) {
            merge_into(x, t);
            again = true;
            break;
          }
          if (bt.is_subset_of(bx)) {
            merge_into(t, x);
            work.push_back(x);
            break;
          }
        }
        if (!alive[static_cast<std::size_t>(t)]) break;
      }
    }
  }

  TreeDecomposition compact() const {
    std::vector<Node> id(bag.size(), -1);
    TreeDecomposition out;
    for (std::size_t t = 0; t < bag.size(); ++t) {
      if (alive[t]) id[t] = out.add_node(bag[t]);
    }
    for (std::size_t t = 0; t < bag.size(); ++t) {
      if (!alive[t]) continue;
      for (Node x : adj[t]) {
        if (static_cast<std::size_t>(x) > t) out.add_edge(id[t], id[static_cast<std::size_t>(x)]);
      }
    }
    return out;
  }
};

Vertex first_missing(const VertexSet& from, const VertexSet& in) {
  for (Vertex v : from) {
    if (!in.contains(v)) return v;
  }
  throw ContractViolation("first_missing: nothing to take");
}

VertexSet with(const VertexSet& s, Vertex v) {
  std::vector<Vertex> ids = s.ids();
  ids.insert(std::upper_bound(ids.begin(), ids.end(), v), v);
  return VertexSet::from_sorted(std::move(ids));
}

VertexSet without(const VertexSet& s, Vertex v) {
  std::vector<Vertex> ids = s.ids();
  ids.erase(std::lower_bound(ids.begin(), ids.end(), v));
  return VertexSet::from_sorted(std::move(ids));
}

}  // namespace

TreeDecomposition make_smooth(const TreeDecomposition& td, const Graph& g) {
  require_valid(g, td);
  if (g.vertex_count() == 0) {
    TreeDecomposition empty;
    empty.add_node({});
    return empty;
  }
  const std::size_t full = static_cast<std::size_t>(td.max_bag_size());
  BagTree tree(td);
  tree.contract_nested();

  // Fill every bag up to ω+1 from its neighbour towards a full bag.
  Node start = -1;
  for (Node t = 0; t < static_cast<Node>(tree.bag.size()); ++t) {
    if (tree.alive[static_cast<std::size_t>(t)] && tree.bag[static_cast<std::size_t>(t)].size() == full) {
      start = t;
      break;
    }
  }
  std::vector<char> seen(tree.bag.size(), 0);
  std::deque<Node> queue{start};
  seen[static_cast<std::size_t>(start)] = 1;
  while (!queue.empty()) {
    Node t = queue.front();
    queue.pop_front();
    for (Node x : tree.adj[static_cast<std::size_t>(t)]) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      seen[static_cast<std::size_t>(x)] = 1;
      auto& bx = tree.bag[static_cast<std::size_t>(x)];
      while (bx.size() < full) bx = with(bx, first_missing(tree.bag[static_cast<std::size_t>(t)], bx));
      queue.push_back(x);
    }
  }
  // All bags now have equal size, so nesting means equality.
  tree.contract_nested();

  // Interpolate between neighbours sharing fewer than ω vertices.
  const std::size_t shared_target = full - 1;
  const std::size_t original = tree.bag.size();
  for (Node t = 0; t < static_cast<Node>(original); ++t) {
    if (!tree.alive[static_cast<std::size_t>(t)]) continue;
    const auto neighbours = tree.adj[static_cast<std::size_t>(t)];
    for (Node x : neighbours) {
      if (x < t || x >= static_cast<Node>(original)) continue;
      const VertexSet target = tree.bag[static_cast<std::size_t>(x)];
      VertexSet current = tree.bag[static_cast<std::size_t>(t)];
      if (current.intersection_size(target) >= shared_target) continue;
      tree.unlink(t, x);
      Node prev = t;
      while (current.intersection_size(target) < shared_target) {
        Vertex out = first_missing(current, target);
        Vertex in = first_missing(target, current);
        current = with(without(current, out), in);
        Node mid = tree.add(current);
        tree.link(prev, mid);
        prev = mid;
      }
      tree.link(prev, x);
    }
  }
  TreeDecomposition out = tree.compact();
  out.set_root(0);
  return out;
}

TreeDecomposition make_nice(const TreeDecomposition& td, const Graph& g) {
  TreeDecomposition smooth = make_smooth(td, g);
  auto rt = rooted_view(smooth);
  TreeDecomposition nice;
  std::vector<Node> top(static_cast<std::size_t>(smooth.node_count()), -1);

  for (Node t : rt.postorder()) {
    const VertexSet& bag = smooth.bag(t);
    const auto& kids = rt.children[static_cast<std::size_t>(t)];
    if (kids.empty()) {
      top[static_cast<std::size_t>(t)] = nice.add_node(bag);
      continue;
    }
    std::vector<Node> branches;
    for (Node c : kids) {
      // child bag -> forget what t lacks -> introduce what t adds; the last node has bag B_t
      Node prev = top[static_cast<std::size_t>(c)];
      VertexSet current = smooth.bag(c);
      for (Vertex v : current.minus(bag)) {
        current = without(current, v);
        Node next = nice.add_node(current);
        nice.add_edge(prev, next);
        prev = next;
      }
      for (Vertex v : bag.minus(current)) {
        current = with(current, v);
        Node next = nice.add_node(current);
        nice.add_edge(prev, next);
        prev = next;
      }
      branches.push_back(prev);
    }
    Node acc = branches.back();
    for (std::size_t i = branches.size() - 1; i-- > 0;) {
      Node join = nice.add_node(bag);
      nice.add_edge(join, branches[i]);
      nice.add_edge(join, acc);
      acc = join;
    }
    top[static_cast<std::size_t>(t)] = acc;
  }
  nice.set_root(top[static_cast<std::size_t>(rt.root)]);
  retag_nice(nice);
  return nice;
}

TreeDecomposition make_leaf_unique(const TreeDecomposition& td, const Graph& g) {
  if (auto why = nice_violation(td)) throw ContractViolation("make_leaf_unique: " + *why);
  require_valid(g, td);
  auto rt = rooted_view(td);
  const std::size_t count = static_cast<std::size_t>(td.node_count());
  std::vector<Node> parent = rt.parent;
  std::vector<std::vector<Node>> children = rt.children;
  std::vector<char> alive(count, 1);
  std::vector<int> occurrences(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& bag : td.bags()) {
    for (Vertex v : bag) ++occurrences[static_cast<std::size_t>(v)];
  }
  Node root = rt.root;

  auto owns_private = [&](Node t) {
    for (Vertex v : td.bag(t)) {
      if (occurrences[static_cast<std::size_t>(v)] == 1) return true;
    }
    return false;
  };
  auto erase = [&](Node t) {
    alive[static_cast<std::size_t>(t)] = 0;
    for (Vertex v : td.bag(t)) --occurrences[static_cast<std::size_t>(v)];
  };
  auto replace_child = [&](Node p, Node old_child, Node new_child) {
    auto& list = children[static_cast<std::size_t>(p)];
    *std::find(list.begin(), list.end(), old_child) = new_child;
  };

  std::deque<Node> work;
  for (Node t : rt.leaves()) work.push_back(t);
  while (!work.empty()) {
    Node t = work.front();
    work.pop_front();
    if (!alive[static_cast<std::size_t>(t)] || !children[static_cast<std::size_t>(t)].empty()) continue;
    if (t == root || owns_private(t)) continue;
    Node s = parent[static_cast<std::size_t>(t)];
    erase(t);
    auto& siblings = children[static_cast<std::size_t>(s)];
    siblings.erase(std::find(siblings.begin(), siblings.end(), t));
    if (siblings.empty()) {
      work.push_back(s);  // introduce node turned leaf
    } else if (td.kind(s) == NodeKind::join) {
      Node c = siblings.front();
      Node up = parent[static_cast<std::size_t>(s)];
      parent[static_cast<std::size_t>(c)] = up;
      if (up >= 0) {
        replace_child(up, s, c);
      } else {
        root = c;
      }
      children[static_cast<std::size_t>(s)].clear();
      erase(s);
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
  retag_nice(out);
  return out;
}

PathDecomposition make_nice_path(const PathDecomposition& pd, const Graph& g) {
  auto report = validate_path(g, pd);
  if (!report.ok()) throw InvalidDecomposition("make_nice_path: " + report.describe());
  const Vertex n = g.vertex_count();
  std::vector<std::size_t> last(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < pd.bags.size(); ++i) {
    for (Vertex v : pd.bags[i]) last[static_cast<std::size_t>(v)] = i;
  }
  PathDecomposition out;
  out.nice = true;
  out.bags.reserve(2 * static_cast<std::size_t>(n));
  VertexSet current;
  for (std::size_t i = 0; i < pd.bags.size(); ++i) {
    for (Vertex v : current.minus(pd.bags[i])) {
      current = without(current, v);
      out.bags.push_back(current);
    }
    for (Vertex v : pd.bags[i].minus(current)) {
      current = with(current, v);
      out.bags.push_back(current);
    }
  }
  for (Vertex v : VertexSet(current)) {
    current = without(current, v);
    out.bags.push_back(current);
  }
  return out;
}

namespace {

class DepthReducer {
 public:
  DepthReducer(const TreeDecomposition& td, Vertex n)
      : td_(td), piece_of_(static_cast<std::size_t>(td.node_count()), -1),
        occurrences_(static_cast<std::size_t>(n), 0), inside_(static_cast<std::size_t>(n), 0) {
    for (const auto& bag : td.bags()) {
      for (Vertex v : bag) ++occurrences_[static_cast<std::size_t>(v)];
    }
  }

  TreeDecomposition run() {
    std::vector<Node> all(static_cast<std::size_t>(td_.node_count()));
    for (Node t = 0; t < td_.node_count(); ++t) all[static_cast<std::size_t>(t)] = t;
    Node root = build(std::move(all), {});
    out_.set_root(root);
    return std::move(out_);
  }

 private:
  // Returns the output node for `piece`; `boundary` holds its nodes adjacent to
  // already-placed tree nodes (at most two).
  Node build(std::vector<Node> piece, std::vector<Node> boundary) {
    const int tag = next_tag_++;
    for (Node t : piece) piece_of_[static_cast<std::size_t>(t)] = tag;

    Node split = boundary.size() == 2 ? path_median(piece, boundary[0], boundary[1], tag)
                                      : centroid(piece, tag);
    VertexSet bag = td_.bag(split).unite(shared_with_outside(piece));
    Node self = out_.add_node(std::move(bag));

    // components of piece - split
    piece_of_[static_cast<std::size_t>(split)] = -1;
    std::vector<std::vector<Node>> parts;
    std::vector<Node> attach;
    for (Node start : td_.neighbors(split)) {
      if (piece_of_[static_cast<std::size_t>(start)] != tag) continue;
      std::vector<Node> part;
      std::vector<Node> stack{start};
      piece_of_[static_cast<std::size_t>(start)] = -2;
      while (!stack.empty()) {
        Node t = stack.back();
        stack.pop_back();
        part.push_back(t);
        for (Node x : td_.neighbors(t)) {
          if (piece_of_[static_cast<std::size_t>(x)] == tag) {
            piece_of_[static_cast<std::size_t>(x)] = -2;
            stack.push_back(x);
          }
        }
      }
      parts.push_back(std::move(part));
      attach.push_back(start);
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<Node> sub_boundary{attach[i]};
      std::sort(parts[i].begin(), parts[i].end());
      for (Node b : boundary) {
        if (b != split && b != attach[i] && std::binary_search(parts[i].begin(), parts[i].end(), b)) {
          sub_boundary.push_back(b);
        }
      }
      Node child = build(std::move(parts[i]), std::move(sub_boundary));
      out_.add_edge(self, child);
    }
    return self;
  }

  VertexSet shared_with_outside(const std::vector<Node>& piece) {
    std::vector<Vertex> touched;
    for (Node t : piece) {
      for (Vertex v : td_.bag(t)) {
        if (inside_[static_cast<std::size_t>(v)]++ == 0) touched.push_back(v);
      }
    }
    std::vector<Vertex> shared;
    for (Vertex v : touched) {
      if (inside_[static_cast<std::size_t>(v)] < occurrences_[static_cast<std::size_t>(v)]) shared.push_back(v);
      inside_[static_cast<std::size_t>(v)] = 0;
    }
    return VertexSet(std::move(shared));
  }

  // DFS preorder of the piece from `start`, filling parent_scratch.
  std::vector<Node> piece_order(Node start, int tag) {
    std::vector<Node> order;
    std::vector<Node> stack{start};
    parent_scratch(start) = -1;
    while (!stack.empty()) {
      Node t = stack.back();
      stack.pop_back();
      order.push_back(t);
      for (Node x : td_.neighbors(t)) {
        if (x != parent_scratch(t) && piece_of_[static_cast<std::size_t>(x)] == tag) {
          parent_scratch(x) = t;
          stack.push_back(x);
        }
      }
    }
    return order;
  }

  Node centroid(const std::vector<Node>& piece, int tag) {
    auto order = piece_order(piece.front(), tag);
    const std::size_t total = piece.size();
    for (auto it = order.rbegin(); it != order.rend(); ++it) size_scratch(*it) = 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Node p = parent_scratch(*it);
      if (p >= 0) size_scratch(p) += size_scratch(*it);
    }
    for (Node t : order) {
      std::size_t largest = total - size_scratch(t);
      for (Node x : td_.neighbors(t)) {
        if (piece_of_[static_cast<std::size_t>(x)] == tag && parent_scratch(x) == t) {
          largest = std::max(largest, size_scratch(x));
        }
      }
      if (2 * largest <= total) return t;
    }
    return order.front();
  }

  Node path_median(const std::vector<Node>& piece, Node a, Node b, int tag) {
    // root the piece at a; parent pointers from b then trace the a-b path
    auto order = piece_order(a, tag);
    for (auto it = order.rbegin(); it != order.rend(); ++it) size_scratch(*it) = 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Node p = parent_scratch(*it);
      if (p >= 0) size_scratch(p) += size_scratch(*it);
    }
    std::vector<Node> path;
    for (Node t = b; t != -1; t = parent_scratch(t)) path.push_back(t);
    std::reverse(path.begin(), path.end());  // a ... b
    // weight of path[i] = its subtree minus the subtree of path[i+1]
    const std::size_t total = piece.size();
    std::size_t prefix = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
      std::size_t below = i + 1 < path.size() ? size_scratch(path[i + 1]) : 0;
      prefix += size_scratch(path[i]) - below;
      if (2 * prefix > total) return path[i];
    }
    return path.back();
  }

  Node& parent_scratch(Node t) {
    if (parent_.size() < piece_of_.size()) parent_.resize(piece_of_.size());
    return parent_[static_cast<std::size_t>(t)];
  }
  std::size_t& size_scratch(Node t) {
    if (size_.size() < piece_of_.size()) size_.resize(piece_of_.size());
    return size_[static_cast<std::size_t>(t)];
  }

  const TreeDecomposition& td_;
  TreeDecomposition out_;
  std::vector<int> piece_of_;
  std::vector<int> occurrences_;
  std::vector<int> inside_;
  std::vector<Node> parent_;
  std::vector<std::size_t> size_;
  int next_tag_ = 0;
};

}  // namespace

TreeDecomposition reduce_depth(const TreeDecomposition& td, const Graph& g) {
  require_valid(g, td);
  if (td.node_count() == 0) {
    TreeDecomposition empty;
    empty.add_node({});
    empty.set_root(0);
    return empty;
  }
  return DepthReducer(td, g.vertex_count()).run();
}

}  // namespace twmis
