#include "twmis/report.hpp"

#include <iomanip>
#include <ostream>

namespace twmis {

std::optional<double> RunReport::ratio() const {
  if (!alpha || trace.final_size == 0) return std::nullopt;
  return static_cast<double>(*alpha) / static_cast<double>(trace.final_size);
}

nlohmann::json to_json(const RunReport& r) {
  using nlohmann::json;
  json out;
  out["schema"] = kReportSchema;
  out["instance"] = r.instance;
  out["box"] = r.box;
  out["n"] = r.n;
  out["m"] = r.m;
  out["width"] = r.width;
  out["k"] = r.trace.k;
  out["f_k"] = r.trace.fk;
  out["ell"] = r.trace.ell;
  out["nice_nodes"] = r.trace.nice_nodes;
  out["leaf_count"] = r.trace.leaf_count;
  out["removed"] = r.trace.removed;
  out["chop_iterations"] = r.trace.chop_iterations;
  json candidates = json::array();
  for (const auto& c : r.trace.candidates) candidates.push_back({{"provenance", c.tag()}, {"size", c.size()}});
  out["candidates"] = candidates;
  json components = json::array();
  for (const auto& c : r.trace.components) {
    json row{{"vertices", c.vertices}, {"leaves", c.leaves},   {"q_size", c.q_size},
             {"branch_nodes", c.branch_nodes}, {"size_a", c.size_a}, {"layers", c.layers},
             {"chosen", std::string(1, c.chosen)}};
    row["size_b"] = c.size_b ? json(*c.size_b) : json(nullptr);
    components.push_back(std::move(row));
  }
  out["components"] = components;
  out["final_size"] = r.trace.final_size;
  out["alpha"] = r.alpha ? json(*r.alpha) : json(nullptr);
  if (r.alpha) out["alpha_source"] = r.alpha_source;
  auto ratio = r.ratio();
  out["ratio"] = ratio ? json(*ratio) : json(nullptr);
  json stages = json::object();
  for (const auto& [name, s] : r.trace.stage_seconds) stages[name] = s;
  for (const auto& [name, s] : r.stage_seconds) stages[name] = s;
  out["seconds"] = stages;
  if (r.audit) {
    json audits = json::array();
    for (const auto& e : r.audit->entries()) {
      json row{{"name", e.name}, {"passes", e.passes}, {"failures", e.failures}};
      if (e.failures) row["first_failure"] = e.first_failure;
      audits.push_back(std::move(row));
    }
    out["audits"] = audits;
  }
  return out;
}

void write_text(std::ostream& out, const RunReport& r) {
  out << "instance   " << r.instance << '\n'
      << "box        " << r.box << '\n'
      << "graph      n=" << r.n << " m=" << r.m << '\n'
      << "decomp     width=" << r.width << " k=" << r.trace.k << " f(k)=" << r.trace.fk << " ell=" << r.trace.ell
      << " leaves=" << r.trace.leaf_count << '\n'
      << "chop       |X|=" << r.trace.removed << " parts=" << r.trace.components.size() << '\n';
  for (const auto& c : r.trace.candidates) out << "candidate  " << std::left << std::setw(12) << c.tag() << c.size() << '\n';
  out << "final      " << r.trace.final_size << '\n';
  if (r.alpha) {
    out << "alpha      " << *r.alpha << " (" << r.alpha_source << ")\n";
    if (auto ratio = r.ratio()) out << "ratio      " << std::fixed << std::setprecision(4) << *ratio << '\n';
  }
  if (r.audit) {
    out << "audits     " << (r.audit->ok() ? "pass" : "FAIL") << '\n';
    for (const auto& e : r.audit->entries()) {
      out << "  " << std::left << std::setw(26) << e.name << e.passes << " ok";
      if (e.failures) out << ", " << e.failures << " failed: " << e.first_failure;
      out << '\n';
    }
  }
}

}  // namespace twmis
