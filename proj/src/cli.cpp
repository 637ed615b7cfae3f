#include "twmis/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "twmis/errors.hpp"
#include "twmis/generators.hpp"
#include "twmis/graph_io.hpp"
#include "twmis/transforms.hpp"

namespace twmis {
namespace fs = std::filesystem;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int thread_count() {
  if (const char* env = std::getenv("TWMIS_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

struct Loaded {
  Graph graph;
  TreeDecomposition td;
};

Loaded load_instance(const fs::path& graph_path, const fs::path& td_path) {
  Loaded in;
  in.graph = read_graph_file(graph_path, guess_graph_format(graph_path));
  TdFile file = read_td_file(td_path);
  if (file.vertex_count != in.graph.vertex_count()) {
    throw InvalidDecomposition("decomposition is for " + std::to_string(file.vertex_count) + " vertices, graph has " +
                               std::to_string(in.graph.vertex_count()));
  }
  in.td = std::move(file.td);
  return in;
}

// ---------------------------------------------------------------------------
// bench

struct BenchRow {
  std::string instance;
  Vertex n = 0;
  std::size_t m = 0;
  int width = 0;
  std::size_t final_size = 0;
  std::size_t greedy = 0;
  std::optional<std::size_t> baseline;
  int baseline_classes = 0;
  double seconds = 0;
  std::string error;
};

BenchRow bench_one(const fs::path& gr, const fs::path& td, const BlackBox& box) {
  BenchRow row;
  row.instance = gr.stem().string();
  auto start = std::chrono::steady_clock::now();
  Loaded in = load_instance(gr, td);
  row.n = in.graph.vertex_count();
  row.m = in.graph.edge_count();
  row.width = in.td.width();
  auto result = approx_tw(in.graph, in.td, box);
  row.final_size = result.solution.size();
  row.greedy = greedy_degeneracy(in.graph).size();
  try {
    auto base = class_split_baseline(in.graph, in.td, 16);
    row.baseline = base.solution.size();
    row.baseline_classes = base.classes;
  } catch (const BoxRefusal&) {
  }
  row.seconds = seconds_since(start);
  return row;
}

double geometric_mean(const std::vector<double>& xs) {
  if (xs.empty()) return std::nan("");
  double log_sum = 0;
  for (double x : xs) log_sum += std::log(x);
  return std::exp(log_sum / static_cast<double>(xs.size()));
}

int cmd_bench(const fs::path& dir, const BlackBox& box, const std::string& json_path, std::ostream& out,
              std::ostream& err) {
  std::vector<fs::path> graphs;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".gr") graphs.push_back(entry.path());
  }
  if (ec) {
    err << "error: cannot read directory " << dir << ": " << ec.message() << '\n';
    return exit_usage;
  }
  if (graphs.empty()) {
    err << "error: no .gr files in " << dir << '\n';
    return exit_usage;
  }
  std::sort(graphs.begin(), graphs.end());
  std::vector<BenchRow> rows(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      fs::path td = graphs[i];
      td.replace_extension(".td");
      try {
        rows[i] = bench_one(graphs[i], td, box);
      } catch (const std::exception& e) {
        rows[i].instance = graphs[i].stem().string();
        rows[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const int threads = std::min<int>(thread_count(), static_cast<int>(std::max<std::size_t>(graphs.size(), 1)));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::vector<double> vs_greedy, vs_baseline;
  nlohmann::json records = nlohmann::json::array();
  out << std::left << std::setw(24) << "instance" << std::right << std::setw(6) << "n" << std::setw(7) << "m"
      << std::setw(4) << "w" << std::setw(7) << "final" << std::setw(7) << "greedy" << std::setw(9) << "baseline"
      << std::setw(4) << "r" << std::setw(9) << "seconds" << '\n';
  std::size_t good = 0;
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      err << "warning: skipping " << row.instance << ": " << row.error << '\n';
      continue;
    }
    ++good;
    if (row.greedy > 0) vs_greedy.push_back(static_cast<double>(row.final_size) / static_cast<double>(row.greedy));
    if (row.baseline && *row.baseline > 0) {
      vs_baseline.push_back(static_cast<double>(row.final_size) / static_cast<double>(*row.baseline));
    }
    out << std::left << std::setw(24) << row.instance << std::right << std::setw(6) << row.n << std::setw(7) << row.m
        << std::setw(4) << row.width << std::setw(7) << row.final_size << std::setw(7) << row.greedy << std::setw(9)
        << (row.baseline ? std::to_string(*row.baseline) : "-") << std::setw(4) << row.baseline_classes
        << std::setw(9) << std::fixed << std::setprecision(3) << row.seconds << '\n';
    nlohmann::json rec{{"instance", row.instance}, {"n", row.n},          {"m", row.m},
                       {"width", row.width},       {"final_size", row.final_size}, {"greedy", row.greedy},
                       {"seconds", row.seconds}};
    rec["baseline"] = row.baseline ? nlohmann::json(*row.baseline) : nlohmann::json(nullptr);
    rec["baseline_classes"] = row.baseline_classes;
    records.push_back(std::move(rec));
  }
  if (good == 0) {
    err << "error: no instance in " << dir << " could be solved\n";
    return exit_usage;
  }
  const double g1 = geometric_mean(vs_greedy), g2 = geometric_mean(vs_baseline);
  out << "instances " << good << "/" << rows.size() << '\n'
      << "geomean final/greedy    " << std::setprecision(4) << g1 << '\n'
      << "geomean final/baseline  " << g2 << '\n';
  if (!json_path.empty()) {
    nlohmann::json doc{{"schema", "twmis-bench/1"}, {"box", box.name}, {"rows", records}};
    doc["geomean_vs_greedy"] = std::isnan(g1) ? nlohmann::json(nullptr) : nlohmann::json(g1);
    doc["geomean_vs_baseline"] = std::isnan(g2) ? nlohmann::json(nullptr) : nlohmann::json(g2);
    write_file(json_path, doc.dump(2) + "\n");
  }
  return exit_ok;
}

}  // namespace

std::optional<ExactAlpha> oracle_alpha(const Graph& g, const TreeDecomposition& td) {
  if (td.max_bag_size() <= 20) {
    try {
      return ExactAlpha{exact_mis_td_dp(g, make_nice(td, g), 20).size(), "decomposition-dp"};
    } catch (const BoxRefusal&) {
    }
  }
  if (g.vertex_count() <= 64) return ExactAlpha{exact_mis_bruteforce(g, 64).size(), "branch-and-bound"};
  return std::nullopt;
}

SolveOutcome solve_instance(const fs::path& graph_path, const fs::path& td_path, const BlackBox& box, bool with_oracle,
                            bool with_audit) {
  auto start = std::chrono::steady_clock::now();
  Loaded in = load_instance(graph_path, td_path);
  SolveOutcome outcome;
  RunReport& report = outcome.report;
  report.instance = graph_path.stem().string();
  report.box = box.name;
  report.n = in.graph.vertex_count();
  report.m = in.graph.edge_count();
  report.stage_seconds.emplace_back("read", seconds_since(start));
  require_valid(in.graph, in.td);
  report.width = in.td.width();

  AuditLog audit;
  auto result = approx_tw(in.graph, in.td, box, with_audit ? &audit : nullptr);
  outcome.solution = result.solution;
  report.trace = std::move(result.trace);
  if (with_audit) {
    audit.check("solution-independent", is_independent_set(in.graph, outcome.solution.vertices),
                "final solution is not independent");
    report.audit = std::move(audit);
  }
  if (with_oracle) {
    auto oracle_start = std::chrono::steady_clock::now();
    if (auto alpha = oracle_alpha(in.graph, in.td)) {
      report.alpha = alpha->value;
      report.alpha_source = alpha->source;
    }
    report.stage_seconds.emplace_back("oracle", seconds_since(oracle_start));
  }
  report.stage_seconds.emplace_back("total", seconds_since(start));
  return outcome;
}

VertexSet read_solution(std::istream& in, Vertex n) {
  std::vector<Vertex> ids;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c' || line[first] == '#') continue;
    std::istringstream fields(line);
    long long v = 0;
    if (!(fields >> v)) throw ParseError(number, "expected a vertex number");
    if (v < 1 || v > n) throw ParseError(number, "vertex " + std::to_string(v) + " out of range");
    ids.push_back(static_cast<Vertex>(v - 1));
  }
  return VertexSet(std::move(ids));
}

void write_solution(std::ostream& out, const VertexSet& s) {
  for (Vertex v : s) out << v + 1 << '\n';
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum independent set approximation from a tree decomposition", "twmis"};
  app.require_subcommand(1);

  std::string graph_path, td_path, box_name = "exact:30", out_path, report_path, to = "nice", dir, json_path;
  bool oracle = false, audit = false, as_json = false;
  int gen_n = 0, gen_k = 0;
  double gen_p = 1.0;
  std::uint64_t gen_seed = 0;
  std::string prefix;

  auto* solve = app.add_subcommand("solve", "Approximate MIS on a graph with a given decomposition");
  solve->add_option("graph", graph_path, "Graph file (.gr, .dimacs, .edges)")->required();
  solve->add_option("td", td_path, "PACE .td decomposition")->required();
  solve->add_option("--box", box_name, "exact[:budget] or clique-removal")->capture_default_str();
  solve->add_flag("--oracle", oracle, "Also compute the exact optimum and the ratio");
  solve->add_flag("--audit", audit, "Check every structural bound; exit 4 on a violation");
  solve->add_option("--out", out_path, "Write the solution here instead of stdout");
  solve->add_option("--report", report_path, "Write the JSON report here");
  solve->add_flag("--json", as_json, "Print the report as JSON instead of text (to stderr)");

  auto* validate = app.add_subcommand("validate", "Check a decomposition against a graph");
  validate->add_option("graph", graph_path)->required();
  validate->add_option("td", td_path)->required();

  auto* transform = app.add_subcommand("transform", "Rewrite a decomposition");
  transform->add_option("graph", graph_path)->required();
  transform->add_option("td", td_path)->required();
  transform->add_option("--to", to, "smooth, nice, leaf-unique or reduce-depth")
      ->check(CLI::IsMember({"smooth", "nice", "leaf-unique", "reduce-depth"}))
      ->capture_default_str();
  transform->add_option("--out", out_path, "Output .td (default stdout)");

  auto* check = app.add_subcommand("check", "Verify a solution file against a graph");
  check->add_option("graph", graph_path)->required();
  check->add_option("solution", out_path)->required();

  auto* gen = app.add_subcommand("gen", "Generate a random partial k-tree with its decomposition");
  gen->add_option("n", gen_n)->required();
  gen->add_option("k", gen_k)->required();
  gen->add_option("p", gen_p, "Edge keep probability")->required();
  gen->add_option("seed", gen_seed)->required();
  gen->add_option("prefix", prefix, "Writes <prefix>.gr and <prefix>.td")->required();

  auto* bench = app.add_subcommand("bench", "Run every <name>.gr/<name>.td pair in a directory");
  bench->add_option("dir", dir)->required();
  bench->add_option("--box", box_name)->capture_default_str();
  bench->add_option("--json", json_path, "Write per-instance records here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  auto box = box_from_name(box_name);
  if (!box) {
    err << "error: unknown box '" << box_name << "' (use exact[:budget] or clique-removal)\n";
    return exit_usage;
  }

  try {
    if (*solve) {
      SolveOutcome outcome = solve_instance(graph_path, td_path, *box, oracle, audit);
      if (out_path.empty()) {
        write_solution(out, outcome.solution.vertices);
      } else {
        std::ostringstream text;
        write_solution(text, outcome.solution.vertices);
        write_file(out_path, text.str());
      }
      if (!report_path.empty()) write_file(report_path, to_json(outcome.report).dump(2) + "\n");
      if (as_json) {
        err << to_json(outcome.report).dump(2) << '\n';
      } else {
        write_text(err, outcome.report);
      }
      if (outcome.report.audit && !outcome.report.audit->ok()) return exit_audit;
      return exit_ok;
    }
    if (*validate) {
      Loaded in = load_instance(graph_path, td_path);
      auto report = validate_td(in.graph, in.td);
      out << (report.ok() ? "valid" : "invalid") << " width=" << report.width << '\n';
      if (!report.ok()) out << report.describe() << '\n';
      return report.ok() ? exit_ok : exit_invalid_td;
    }
    if (*transform) {
      Loaded in = load_instance(graph_path, td_path);
      TreeDecomposition result;
      if (to == "smooth") {
        result = make_smooth(in.td, in.graph);
      } else if (to == "nice") {
        result = make_nice(in.td, in.graph);
      } else if (to == "leaf-unique") {
        result = make_leaf_unique(make_nice(in.td, in.graph), in.graph);
      } else {
        result = reduce_depth(in.td, in.graph);
      }
      std::ostringstream text;
      write_pace_td(text, result, in.graph.vertex_count());
      if (out_path.empty()) {
        out << text.str();
      } else {
        write_file(out_path, text.str());
      }
      return exit_ok;
    }
    if (*check) {
      Graph g = read_graph_file(graph_path, guess_graph_format(graph_path));
      std::ifstream f(out_path);
      if (!f) throw std::runtime_error("cannot read " + out_path);
      VertexSet s = read_solution(f, g.vertex_count());
      const bool ok = is_independent_set(g, s);
      out << (ok ? "independent" : "not independent") << " size=" << s.size() << '\n';
      return ok ? exit_ok : exit_audit;
    }
    if (*gen) {
      auto inst = gen_partial_ktree(gen_n, gen_k, gen_p, gen_seed);
      std::ostringstream gr, td;
      write_pace_gr(gr, inst.graph);
      write_pace_td(td, inst.td, inst.graph.vertex_count());
      write_file(prefix + ".gr", gr.str());
      write_file(prefix + ".td", td.str());
      out << prefix << ".gr\n" << prefix << ".td\n";
      return exit_ok;
    }
    if (*bench) return cmd_bench(dir, *box, json_path, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const InvalidDecomposition& e) {
    err << "invalid decomposition: " << e.what() << '\n';
    return exit_invalid_td;
  } catch (const BoxRefusal& e) {
    err << "black box refused: " << e.what() << '\n';
    return exit_box_refusal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace twmis
