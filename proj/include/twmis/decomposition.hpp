#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twmis/graph.hpp"

namespace twmis {

using Node = std::int32_t;

enum class NodeKind { plain, leaf, introduce, forget, join };

const char* to_string(NodeKind kind);

/// A tree of bags. Nodes are 0..node_count()-1; the root is optional.
///
/// Kind tags are only meaningful for nice decompositions (see retag_nice()); a freshly
/// assembled decomposition has every node tagged `plain`.
class TreeDecomposition {
 public:
  Node add_node(VertexSet bag, NodeKind kind = NodeKind::plain);
  void add_edge(Node a, Node b);

  Node node_count() const noexcept { return static_cast<Node>(bags_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const VertexSet& bag(Node t) const { return bags_[static_cast<std::size_t>(t)]; }
  void set_bag(Node t, VertexSet bag) { bags_[static_cast<std::size_t>(t)] = std::move(bag); }
  const std::vector<VertexSet>& bags() const noexcept { return bags_; }
  const std::vector<Node>& neighbors(Node t) const { return adj_[static_cast<std::size_t>(t)]; }
  Node degree(Node t) const { return static_cast<Node>(neighbors(t).size()); }
  std::vector<std::pair<Node, Node>> edges() const;

  NodeKind kind(Node t) const { return kinds_[static_cast<std::size_t>(t)]; }
  void set_kind(Node t, NodeKind kind) { kinds_[static_cast<std::size_t>(t)] = kind; }

  std::optional<Node> root() const noexcept { return root_; }
  void set_root(Node t);
  void clear_root() noexcept { root_.reset(); }

  /// Largest bag size; 0 for an empty decomposition.
  int max_bag_size() const;
  /// max bag size - 1 (so -1 when there are no non-empty bags).
  int width() const { return max_bag_size() - 1; }

  /// Same tree with every bag mapped through `local_of`; vertices with local_of[v] < 0
  /// are dropped. Root and kinds are carried over unchanged.
  TreeDecomposition relabel(const std::vector<Vertex>& local_of) const;

 private:
  std::vector<VertexSet> bags_;
  std::vector<std::vector<Node>> adj_;
  std::vector<NodeKind> kinds_;
  std::optional<Node> root_;
  std::size_t edge_count_ = 0;
};

/// Parent/children arrays of a rooted tree decomposition.
struct RootedTree {
  Node root = -1;
  std::vector<Node> parent;                 // -1 for the root
  std::vector<std::vector<Node>> children;  // in increasing node order
  std::vector<Node> preorder;
  std::vector<int> depth;                   // edges from the root

  int height() const;  // longest root-to-leaf path, in edges
  std::vector<Node> leaves() const;
  std::vector<Node> postorder() const;
};

/// Requires a root and a tree-shaped node graph; throws ContractViolation otherwise.
RootedTree rooted_view(const TreeDecomposition& td);

/// Depth of a rooted decomposition (0 for a single node).
int decomposition_depth(const TreeDecomposition& td);

/// Nodes with no children in the rooted decomposition.
std::vector<Node> rooted_leaves(const TreeDecomposition& td);

/// An ordered sequence of bags B_1..B_m (stored 0-based).
struct PathDecomposition {
  std::vector<VertexSet> bags;
  bool nice = false;

  int max_bag_size() const;
  int width() const { return max_bag_size() - 1; }
  /// The path as a tree decomposition rooted at its last bag.
  TreeDecomposition as_tree() const;
};

/// Outcome of checking the three decomposition properties, with a witness per failure.
struct ValidationReport {
  bool is_tree = true;
  bool bags_in_range = true;
  std::optional<Vertex> out_of_range_vertex;
  bool covers_vertices = true;
  std::optional<Vertex> missing_vertex;
  bool covers_edges = true;
  std::optional<Edge> uncovered_edge;
  bool connected_occurrences = true;
  std::optional<Vertex> disconnected_vertex;
  int width = -1;

  bool ok() const noexcept {
    return is_tree && bags_in_range && covers_vertices && covers_edges && connected_occurrences;
  }
  /// Human-readable summary; witnesses are printed 1-indexed to match the file formats.
  std::string describe() const;
};

ValidationReport validate_td(const Graph& g, const TreeDecomposition& td);
ValidationReport validate_path(const Graph& g, const PathDecomposition& pd);

/// Throws InvalidDecomposition carrying the report text when validation fails.
void require_valid(const Graph& g, const TreeDecomposition& td);

/// nullopt when td is a nice rooted decomposition whose kind tags match its shape,
/// otherwise a description of the first violation found.
std::optional<std::string> nice_violation(const TreeDecomposition& td);
bool is_nice(const TreeDecomposition& td);

/// Consecutive bags differ by exactly one vertex.
bool is_nice_path(const PathDecomposition& pd);

/// Recomputes kind tags from the rooted shape. Throws ContractViolation if some node
/// fits none of leaf/introduce/forget/join.
void retag_nice(TreeDecomposition& td);

// PACE 2017 .td files: "s td <bags> <max bag size> <n>", "b <id> <v...>", "a b" edges.
struct TdFile {
  TreeDecomposition td;
  Vertex vertex_count = 0;
};

TdFile parse_td(std::istream& in);
TdFile parse_td(std::string_view text);
TdFile read_td_file(const std::filesystem::path& path);
void write_pace_td(std::ostream& out, const TreeDecomposition& td, Vertex vertex_count);

}  // namespace twmis
