#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "twmis/audit.hpp"
#include "twmis/treewidth_approx.hpp"

namespace twmis {

inline constexpr const char* kReportSchema = "twmis-report/1";

/// Everything cmd_solve knows about one run.
struct RunReport {
  std::string instance;
  std::string box;
  Vertex n = 0;
  std::size_t m = 0;
  int width = -1;
  PipelineTrace trace;
  std::optional<std::size_t> alpha;
  std::string alpha_source;
  std::vector<std::pair<std::string, double>> stage_seconds;
  std::optional<AuditLog> audit;

  /// α / final, when α is known and the final set is non-empty.
  std::optional<double> ratio() const;
};

nlohmann::json to_json(const RunReport& report);
void write_text(std::ostream& out, const RunReport& report);

}  // namespace twmis
