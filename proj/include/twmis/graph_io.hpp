#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "twmis/graph.hpp"

namespace twmis {

enum class GraphFormat {
  pace_gr,    // "p tw n m", 1-indexed "u v" lines, "c" comments
  dimacs,     // "p edge n m", "e u v" lines, "c" comments
  edge_list,  // bare 1-indexed "u v" lines; n is the largest identifier seen
};

std::optional<GraphFormat> graph_format_from_name(std::string_view name);

/// Picks a format from the file extension (.gr, .dimacs/.col/.clq, anything else edge list).
GraphFormat guess_graph_format(const std::filesystem::path& path);

Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(std::string_view text, GraphFormat format);
Graph read_graph_file(const std::filesystem::path& path, GraphFormat format);

void write_pace_gr(std::ostream& out, const Graph& g);

}  // namespace twmis
