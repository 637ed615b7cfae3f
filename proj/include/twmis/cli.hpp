#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twmis/report.hpp"
#include "twmis/solvers.hpp"

namespace twmis {

/// Process exit codes of the twmis tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,        // bad arguments, I/O failures, anything else
  exit_parse = 2,        // malformed .gr / .td input
  exit_invalid_td = 3,   // decomposition fails validation
  exit_audit = 4,        // --audit found a violated bound, or a solution file is not independent
  exit_box_refusal = 5,  // the black box refused an input
};

struct ExactAlpha {
  std::size_t value = 0;
  std::string source;
};

/// α(G) by the decomposition DP when bags have at most 20 vertices, else by branch and
/// bound when n <= 64; nullopt when neither applies.
std::optional<ExactAlpha> oracle_alpha(const Graph& g, const TreeDecomposition& td);

/// One solve run: read, validate, approx_tw, optional oracle and audits.
struct SolveOutcome {
  IndependentSetResult solution;
  RunReport report;
};
SolveOutcome solve_instance(const std::filesystem::path& graph_path, const std::filesystem::path& td_path,
                            const BlackBox& box, bool with_oracle, bool with_audit);

/// 1-indexed vertex per line; blank lines and lines starting with 'c' or '#' are skipped.
VertexSet read_solution(std::istream& in, Vertex n);
void write_solution(std::ostream& out, const VertexSet& s);

/// Entry point of the tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twmis
