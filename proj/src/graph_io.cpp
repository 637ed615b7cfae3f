#include "twmis/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "twmis/errors.hpp"

namespace twmis {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

long long parse_count(std::string_view token, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

struct RawEdges {
  long long n = -1;
  long long declared_m = -1;
  std::vector<Edge> edges;
  std::size_t edge_lines = 0;
};

Vertex to_vertex(long long one_based, long long n, std::size_t line_no) {
  if (one_based < 1 || (n >= 0 && one_based > n)) {
    throw ParseError(line_no, "vertex index " + std::to_string(one_based) + " out of range [1, " +
                                  std::to_string(n) + "]");
  }
  return static_cast<Vertex>(one_based - 1);
}

void push_edge(RawEdges& raw, long long a, long long b, std::size_t line_no) {
  Vertex u = to_vertex(a, raw.n, line_no);
  Vertex v = to_vertex(b, raw.n, line_no);
  if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
  raw.edges.emplace_back(u, v);
  ++raw.edge_lines;
}

Graph finish(const RawEdges& raw) {
  return Graph::from_edges(static_cast<Vertex>(raw.n), raw.edges);
}

Graph parse_with_header(std::istream& in, std::string_view problem, bool e_prefix) {
  RawEdges raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (raw.n >= 0) throw ParseError(line_no, "duplicate header");
      // DIMACS coloring files ("p col") share the edge syntax
      bool problem_ok =
          tokens.size() == 4 && (tokens[1] == problem || (e_prefix && tokens[1] == "col"));
      if (!problem_ok) {
        throw ParseError(line_no, "malformed header, expected 'p " + std::string(problem) + " n m'");
      }
      raw.n = parse_count(tokens[2], line_no);
      raw.declared_m = parse_count(tokens[3], line_no);
      if (raw.n < 0 || raw.declared_m < 0) throw ParseError(line_no, "negative count in header");
      continue;
    }
    if (raw.n < 0) throw ParseError(line_no, "edge line before header");
    if (e_prefix) {
      if (tokens.size() != 3 || tokens[0] != "e") throw ParseError(line_no, "expected 'e u v'");
      push_edge(raw, parse_count(tokens[1], line_no), parse_count(tokens[2], line_no), line_no);
    } else {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v'");
      push_edge(raw, parse_count(tokens[0], line_no), parse_count(tokens[1], line_no), line_no);
    }
  }
  if (raw.n < 0) throw ParseError(0, "missing header line");
  if (static_cast<long long>(raw.edge_lines) != raw.declared_m) {
    throw ParseError(line_no, "header declares " + std::to_string(raw.declared_m) +
                                  " edges but " + std::to_string(raw.edge_lines) + " were read");
  }
  return finish(raw);
}

Graph parse_edge_list(std::istream& in) {
  struct Pending {
    long long a, b;
    std::size_t line;
  };
  std::vector<Pending> pending;
  long long max_id = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0][0] == '#' || tokens[0][0] == '%' || tokens[0] == "c") continue;
    if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v'");
    long long a = parse_count(tokens[0], line_no);
    long long b = parse_count(tokens[1], line_no);
    if (a < 1 || b < 1) throw ParseError(line_no, "vertex indices are 1-based");
    max_id = std::max({max_id, a, b});
    pending.push_back({a, b, line_no});
  }
  RawEdges raw;
  raw.n = max_id;
  for (const auto& p : pending) push_edge(raw, p.a, p.b, p.line);
  return finish(raw);
}

}  // namespace

std::optional<GraphFormat> graph_format_from_name(std::string_view name) {
  if (name == "pace-gr" || name == "gr" || name == "pace") return GraphFormat::pace_gr;
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "edge-list" || name == "edges") return GraphFormat::edge_list;
  return std::nullopt;
}

GraphFormat guess_graph_format(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  if (ext == ".gr") return GraphFormat::pace_gr;
  if (ext == ".dimacs" || ext == ".col" || ext == ".clq") return GraphFormat::dimacs;
  return GraphFormat::edge_list;
}

Graph parse_graph(std::istream& in, GraphFormat format) {
  switch (format) {
    case GraphFormat::pace_gr:
      return parse_with_header(in, "tw", false);
    case GraphFormat::dimacs:
      return parse_with_header(in, "edge", true);
    case GraphFormat::edge_list:
      return parse_edge_list(in);
  }
  throw ContractViolation("parse_graph: unknown format");
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, format);
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_graph(in, format);
}

void write_pace_gr(std::ostream& out, const Graph& g) {
  out << "p tw " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << (u + 1) << ' ' << (v + 1) << '\n';
}

}  // namespace twmis
