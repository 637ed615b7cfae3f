#include "twmis/decomposition.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "twmis/errors.hpp"

namespace twmis {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::plain: return "plain";
    case NodeKind::leaf: return "leaf";
    case NodeKind::introduce: return "introduce";
    case NodeKind::forget: return "forget";
    case NodeKind::join: return "join";
  }
  return "?";
}

Node TreeDecomposition::add_node(VertexSet bag, NodeKind kind) {
  bags_.push_back(std::move(bag));
  adj_.emplace_back();
  kinds_.push_back(kind);
  return static_cast<Node>(bags_.size() - 1);
}

void TreeDecomposition::add_edge(Node a, Node b) {
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count() || a == b) {
    throw ContractViolation("TreeDecomposition::add_edge: bad endpoints");
  }
  adj_[static_cast<std::size_t>(a)].push_back(b);
  adj_[static_cast<std::size_t>(b)].push_back(a);
  ++edge_count_;
}

std::vector<std::pair<Node, Node>> TreeDecomposition::edges() const {
  std::vector<std::pair<Node, Node>> out;
  out.reserve(edge_count_);
  for (Node a = 0; a < node_count(); ++a) {
    for (Node b : neighbors(a)) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void TreeDecomposition::set_root(Node t) {
  if (t < 0 || t >= node_count()) throw ContractViolation("TreeDecomposition::set_root: no such node");
  root_ = t;
}

int TreeDecomposition::max_bag_size() const {
  std::size_t best = 0;
  for (const auto& b : bags_) best = std::max(best, b.size());
  return static_cast<int>(best);
}

TreeDecomposition TreeDecomposition::relabel(const std::vector<Vertex>& local_of) const {
  TreeDecomposition out;
  for (Node t = 0; t < node_count(); ++t) {
    std::vector<Vertex> ids;
    for (Vertex v : bag(t)) {
      if (v < static_cast<Vertex>(local_of.size()) && local_of[static_cast<std::size_t>(v)] >= 0) {
        ids.push_back(local_of[static_cast<std::size_t>(v)]);
      }
    }
    out.add_node(VertexSet(std::move(ids)), kind(t));
  }
  for (auto [a, b] : edges()) out.add_edge(a, b);
  if (root_) out.set_root(*root_);
  return out;
}

int RootedTree::height() const {
  int best = 0;
  for (int d : depth) best = std::max(best, d);
  return best;
}

std::vector<Node> RootedTree::leaves() const {
  std::vector<Node> out;
  for (Node t : preorder) {
    if (children[static_cast<std::size_t>(t)].empty()) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Node> RootedTree::postorder() const {
  // children before parents, siblings left to right
  std::vector<Node> order;
  order.reserve(preorder.size());
  std::vector<std::pair<Node, std::size_t>> stack;
  if (root >= 0) stack.emplace_back(root, 0);
  while (!stack.empty()) {
    auto& [t, next] = stack.back();
    const auto& kids = children[static_cast<std::size_t>(t)];
    if (next < kids.size()) {
      Node c = kids[next++];
      stack.emplace_back(c, 0);
    } else {
      order.push_back(t);
      stack.pop_back();
    }
  }
  return order;
}

RootedTree rooted_view(const TreeDecomposition& td) {
  if (!td.root()) throw ContractViolation("rooted_view: decomposition has no root");
  const Node n = td.node_count();
  if (td.edge_count() + 1 != static_cast<std::size_t>(n)) {
    throw ContractViolation("rooted_view: node graph is not a tree");
  }
  RootedTree rt;
  rt.root = *td.root();
  rt.parent.assign(static_cast<std::size_t>(n), -1);
  rt.children.assign(static_cast<std::size_t>(n), {});
  rt.depth.assign(static_cast<std::size_t>(n), -1);
  rt.preorder.reserve(static_cast<std::size_t>(n));
  std::vector<Node> stack{rt.root};
  rt.depth[static_cast<std::size_t>(rt.root)] = 0;
  while (!stack.empty()) {
    Node t = stack.back();
    stack.pop_back();
    rt.preorder.push_back(t);
    auto nbrs = td.neighbors(t);
    std::sort(nbrs.begin(), nbrs.end());
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
      Node c = *it;
      if (c == rt.parent[static_cast<std::size_t>(t)]) continue;
      if (rt.depth[static_cast<std::size_t>(c)] >= 0) {
        throw ContractViolation("rooted_view: node graph has a cycle");
      }
      rt.parent[static_cast<std::size_t>(c)] = t;
      rt.depth[static_cast<std::size_t>(c)] = rt.depth[static_cast<std::size_t>(t)] + 1;
      stack.push_back(c);
    }
    for (Node c : nbrs) {
      if (c != rt.parent[static_cast<std::size_t>(t)]) rt.children[static_cast<std::size_t>(t)].push_back(c);
    }
  }
  if (rt.preorder.size() != static_cast<std::size_t>(n)) {
    throw ContractViolation("rooted_view: node graph is disconnected");
  }
  return rt;
}

int decomposition_depth(const TreeDecomposition& td) { return rooted_view(td).height(); }

std::vector<Node> rooted_leaves(const TreeDecomposition& td) { return rooted_view(td).leaves(); }

int PathDecomposition::max_bag_size() const {
  std::size_t best = 0;
  for (const auto& b : bags) best = std::max(best, b.size());
  return static_cast<int>(best);
}

TreeDecomposition PathDecomposition::as_tree() const {
  TreeDecomposition td;
  for (const auto& b : bags) td.add_node(b);
  for (Node i = 1; i < td.node_count(); ++i) td.add_edge(i - 1, i);
  if (td.node_count() > 0) {
    td.set_root(td.node_count() - 1);
    if (is_nice_path(*this)) retag_nice(td);
  }
  return td;
}

namespace {

bool node_graph_is_tree(const TreeDecomposition& td) {
  const Node n = td.node_count();
  if (n == 0) return true;
  if (td.edge_count() + 1 != static_cast<std::size_t>(n)) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Node> stack{0};
  seen[0] = 1;
  Node reached = 0;
  while (!stack.empty()) {
    Node t = stack.back();
    stack.pop_back();
    ++reached;
    for (Node c : td.neighbors(t)) {
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        stack.push_back(c);
      }
    }
  }
  return reached == n;
}

}  // namespace

ValidationReport validate_td(const Graph& g, const TreeDecomposition& td) {
  ValidationReport report;
  report.width = td.width();
  report.is_tree = node_graph_is_tree(td);

  const Vertex n = g.vertex_count();
  std::vector<std::vector<Node>> occurrences(static_cast<std::size_t>(n));
  for (Node t = 0; t < td.node_count(); ++t) {
    for (Vertex v : td.bag(t)) {
      if (v < 0 || v >= n) {
        if (report.bags_in_range) {
          report.bags_in_range = false;
          report.out_of_range_vertex = v;
        }
        continue;
      }
      occurrences[static_cast<std::size_t>(v)].push_back(t);
    }
  }

  for (Vertex v = 0; v < n && report.covers_vertices; ++v) {
    if (occurrences[static_cast<std::size_t>(v)].empty()) {
      report.covers_vertices = false;
      report.missing_vertex = v;
    }
  }

  for (auto [u, v] : g.edges()) {
    const auto& a = occurrences[static_cast<std::size_t>(u)];
    const auto& b = occurrences[static_cast<std::size_t>(v)];
    // occurrence lists are increasing in node id
    bool shared = false;
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
      if (a[i] == b[j]) {
        shared = true;
        break;
      }
      if (a[i] < b[j]) ++i; else ++j;
    }
    if (!shared) {
      report.covers_edges = false;
      report.uncovered_edge = Edge{u, v};
      break;
    }
  }

  std::vector<char> holds(static_cast<std::size_t>(td.node_count()), 0);
  std::vector<Node> stack;
  for (Vertex v = 0; v < n; ++v) {
    const auto& occ = occurrences[static_cast<std::size_t>(v)];
    if (occ.size() <= 1) continue;
    for (Node t : occ) holds[static_cast<std::size_t>(t)] = 1;
    std::size_t reached = 0;
    stack.assign(1, occ.front());
    holds[static_cast<std::size_t>(occ.front())] = 2;
    while (!stack.empty()) {
      Node t = stack.back();
      stack.pop_back();
      ++reached;
      for (Node c : td.neighbors(t)) {
        if (holds[static_cast<std::size_t>(c)] == 1) {
          holds[static_cast<std::size_t>(c)] = 2;
          stack.push_back(c);
        }
      }
    }
    for (Node t : occ) holds[static_cast<std::size_t>(t)] = 0;
    if (reached != occ.size()) {
      report.connected_occurrences = false;
      report.disconnected_vertex = v;
      break;
    }
  }
  return report;
}

ValidationReport validate_path(const Graph& g, const PathDecomposition& pd) {
  return validate_td(g, pd.as_tree());
}

std::string ValidationReport::describe() const {
  std::ostringstream out;
  if (ok()) {
    out << "valid, width " << width;
    return out.str();
  }
  out << "invalid:";
  if (!is_tree) out << " node graph is not a tree;";
  if (!bags_in_range) out << " bag vertex " << (*out_of_range_vertex + 1) << " is not a graph vertex;";
  if (!covers_vertices) out << " vertex " << (*missing_vertex + 1) << " is in no bag (property 1);";
  if (!covers_edges) {
    out << " edge (" << (uncovered_edge->first + 1) << ", " << (uncovered_edge->second + 1)
        << ") is in no bag (property 2);";
  }
  if (!connected_occurrences) {
    out << " bags containing vertex " << (*disconnected_vertex + 1)
        << " are not connected (property 3);";
  }
  return out.str();
}

void require_valid(const Graph& g, const TreeDecomposition& td) {
  auto report = validate_td(g, td);
  if (!report.ok()) throw InvalidDecomposition(report.describe());
}

namespace {

// Expected kind for node t given its rooted children, or nullopt if none fits.
std::optional<NodeKind> shape_kind(const TreeDecomposition& td, const RootedTree& rt, Node t) {
  const auto& kids = rt.children[static_cast<std::size_t>(t)];
  const auto& bag = td.bag(t);
  if (kids.empty()) return NodeKind::leaf;
  if (kids.size() == 1) {
    const auto& below = td.bag(kids[0]);
    if (below.size() + 1 == bag.size() && below.is_subset_of(bag)) return NodeKind::introduce;
    if (bag.size() + 1 == below.size() && bag.is_subset_of(below)) return NodeKind::forget;
    return std::nullopt;
  }
  if (kids.size() == 2 && td.bag(kids[0]) == bag && td.bag(kids[1]) == bag) return NodeKind::join;
  return std::nullopt;
}

}  // namespace

std::optional<std::string> nice_violation(const TreeDecomposition& td) {
  if (!td.root()) return "decomposition is not rooted";
  if (!node_graph_is_tree(td)) return "node graph is not a tree";
  auto rt = rooted_view(td);
  for (Node t : rt.preorder) {
    auto expected = shape_kind(td, rt, t);
    if (!expected) return "node " + std::to_string(t) + " is not leaf/introduce/forget/join";
    if (td.kind(t) != *expected) {
      return "node " + std::to_string(t) + " is tagged " + to_string(td.kind(t)) +
             " but has the shape of " + to_string(*expected);
    }
  }
  return std::nullopt;
}

bool is_nice(const TreeDecomposition& td) { return !nice_violation(td).has_value(); }

bool is_nice_path(const PathDecomposition& pd) {
  for (std::size_t i = 1; i < pd.bags.size(); ++i) {
    const auto& a = pd.bags[i - 1];
    const auto& b = pd.bags[i];
    std::size_t common = a.intersection_size(b);
    if ((a.size() - common) + (b.size() - common) != 1) return false;
  }
  return true;
}

void retag_nice(TreeDecomposition& td) {
  auto rt = rooted_view(td);
  for (Node t : rt.preorder) {
    auto kind = shape_kind(td, rt, t);
    if (!kind) throw ContractViolation("retag_nice: node " + std::to_string(t) + " is not nice");
    td.set_kind(t, *kind);
  }
}

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long number(std::string_view token, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

TdFile parse_td(std::istream& in) {
  long long bag_count = -1, declared_max = -1, n = -1;
  std::vector<std::optional<VertexSet>> bags;
  std::vector<std::pair<Node, Node>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = tokens_of(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "s") {
      if (bag_count >= 0) throw ParseError(line_no, "duplicate solution line");
      if (tok.size() != 5 || tok[1] != "td") {
        throw ParseError(line_no, "malformed header, expected 's td <bags> <max bag> <n>'");
      }
      bag_count = number(tok[2], line_no);
      declared_max = number(tok[3], line_no);
      n = number(tok[4], line_no);
      if (bag_count < 0 || declared_max < 0 || n < 0) throw ParseError(line_no, "negative count");
      bags.assign(static_cast<std::size_t>(bag_count), std::nullopt);
      continue;
    }
    if (bag_count < 0) throw ParseError(line_no, "content before 's td' line");
    if (tok[0] == "b") {
      if (tok.size() < 2) throw ParseError(line_no, "bag line without id");
      long long id = number(tok[1], line_no);
      if (id < 1 || id > bag_count) throw ParseError(line_no, "bag id " + std::to_string(id) + " out of range");
      if (bags[static_cast<std::size_t>(id - 1)]) throw ParseError(line_no, "bag " + std::to_string(id) + " listed twice");
      std::vector<Vertex> ids;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        long long v = number(tok[i], line_no);
        if (v < 1 || v > n) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
        ids.push_back(static_cast<Vertex>(v - 1));
      }
      VertexSet bag(std::move(ids));
      if (static_cast<long long>(bag.size()) > declared_max) {
        throw ParseError(line_no, "bag larger than the declared maximum bag size");
      }
      bags[static_cast<std::size_t>(id - 1)] = std::move(bag);
      continue;
    }
    if (tok.size() != 2) throw ParseError(line_no, "expected a tree edge 'a b'");
    long long a = number(tok[0], line_no);
    long long b = number(tok[1], line_no);
    if (a < 1 || a > bag_count || b < 1 || b > bag_count || a == b) {
      throw ParseError(line_no, "tree edge endpoint out of range");
    }
    edges.emplace_back(static_cast<Node>(a - 1), static_cast<Node>(b - 1));
  }
  if (bag_count < 0) throw ParseError(0, "missing 's td' line");
  TdFile file;
  file.vertex_count = static_cast<Vertex>(n);
  for (std::size_t i = 0; i < bags.size(); ++i) {
    if (!bags[i]) throw ParseError(0, "bag " + std::to_string(i + 1) + " is never listed");
    file.td.add_node(std::move(*bags[i]));
  }
  for (auto [a, b] : edges) file.td.add_edge(a, b);
  return file;
}

TdFile parse_td(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_td(in);
}

TdFile read_td_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_td(in);
}

void write_pace_td(std::ostream& out, const TreeDecomposition& td, Vertex vertex_count) {
  out << "s td " << td.node_count() << ' ' << td.max_bag_size() << ' ' << vertex_count << '\n';
  for (Node t = 0; t < td.node_count(); ++t) {
    out << "b " << (t + 1);
    for (Vertex v : td.bag(t)) out << ' ' << (v + 1);
    out << '\n';
  }
  for (auto [a, b] : td.edges()) out << (a + 1) << ' ' << (b + 1) << '\n';
}

}  // namespace twmis
