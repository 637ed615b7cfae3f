#include "twmis/treewidth_approx.hpp"

#include <algorithm>
#include <chrono>

#include "twmis/errors.hpp"
#include "twmis/pathwidth_approx.hpp"
#include "twmis/surgery.hpp"
#include "twmis/transforms.hpp"

namespace twmis {
namespace {

std::vector<int> occurrence_counts(const TreeDecomposition& td, Vertex n) {
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (const auto& bag : td.bags()) {
    for (Vertex v : bag) ++count[static_cast<std::size_t>(v)];
  }
  return count;
}

class Stopwatch {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

IndependentSetResult leaf_unique_candidate(const Graph& g, const TreeDecomposition& td) {
  const auto count = occurrence_counts(td, g.vertex_count());
  std::vector<Vertex> ids;
  for (Node leaf : rooted_leaves(td)) {
    const auto& bag = td.bag(leaf);
    auto it = std::find_if(bag.begin(), bag.end(), [&](Vertex v) { return count[static_cast<std::size_t>(v)] == 1; });
    if (it == bag.end()) {
      throw ContractViolation("leaf_unique_candidate: leaf " + std::to_string(leaf) + " has no private vertex");
    }
    ids.push_back(*it);
  }
  IndependentSetResult out{VertexSet(std::move(ids)), Provenance::leaf_set, -1};
  verify_solution(g, out.vertices, "leaf_unique_candidate");
  return out;
}

std::vector<VertexSet> level_split_q(const TreeDecomposition& tq) {
  auto rt = rooted_view(tq);
  std::vector<std::vector<Vertex>> layers(static_cast<std::size_t>(rt.height()) + 1);
  std::vector<int> highest;
  for (Node t : rt.preorder) {
    const int d = rt.depth[static_cast<std::size_t>(t)];
    for (Vertex v : tq.bag(t)) {
      auto vi = static_cast<std::size_t>(v);
      if (vi >= highest.size()) highest.resize(vi + 1, -1);
      if (highest[vi] < 0 || d < highest[vi]) highest[vi] = d;
    }
  }
  for (std::size_t v = 0; v < highest.size(); ++v) {
    if (highest[v] >= 0) layers[static_cast<std::size_t>(highest[v])].push_back(static_cast<Vertex>(v));
  }
  std::vector<VertexSet> out;
  for (auto& layer : layers) out.push_back(VertexSet::from_sorted(std::move(layer)));
  return out;
}

IndependentSetResult approx_component(const Graph& c, const TreeDecomposition& tc, const BlackBox& box,
                                      AuditLog* audit, ComponentRecord* record) {
  const int k = tc.max_bag_size();
  const VertexSet q = branch_bag_union(tc);
  const std::size_t branch_count = branch_nodes(tc).size();
  ComponentRecord rec;
  rec.vertices = static_cast<std::size_t>(c.vertex_count());
  rec.leaves = tc.root() ? rooted_leaves(tc).size() : 0;
  rec.q_size = q.size();
  rec.branch_nodes = branch_count;

  // branch A: C - Q has a path decomposition
  InducedPath minus_q = path_decomp_minus_q(tc, q, c);
  if (audit) {
    auto report = validate_path(minus_q.graph, minus_q.path);
    audit->check("q.path-valid", report.ok(), report.describe());
    audit->check("q.path-width", minus_q.path.max_bag_size() <= k,
                 "C - Q path width " + std::to_string(minus_q.path.width()) + " > k - 1");
  }
  IndependentSetResult best{VertexSet{}, Provenance::pw_level, 0};
  if (minus_q.graph.vertex_count() > 0) {
    IndependentSetResult a = approx_pw(minus_q.graph, minus_q.path, box, audit);
    best = {lift_to_parent(minus_q.graph, a.vertices), a.provenance, a.level};
  }
  rec.size_a = best.size();

  // branch B: layers of C[Q]
  if (!q.empty()) {
    InducedTree contracted = contract_to_branch_td(tc, q, c);
    TreeDecomposition balanced = reduce_depth(contracted.td, contracted.graph);
    if (audit) {
      auto report = validate_td(contracted.graph, contracted.td);
      audit->check("q.contract-valid", report.ok(), report.describe());
      audit->check("q.contract-width", contracted.td.max_bag_size() <= 2 * k,
                   "C[Q] width " + std::to_string(contracted.td.width()) + " > 2k - 1");
      audit->check("q.contract-nodes", static_cast<std::size_t>(contracted.td.node_count()) <= 2 * branch_count,
                   std::to_string(contracted.td.node_count()) + " nodes for " + std::to_string(branch_count) +
                       " branch nodes");
      auto balanced_report = validate_td(contracted.graph, balanced);
      audit->check("q.rebalanced-valid", balanced_report.ok(), balanced_report.describe());
      audit->check("q.rebalanced-width", balanced.max_bag_size() <= 6 * k,
                   "rebalanced width " + std::to_string(balanced.width()) + " > 6k - 1");
    }
    auto layers = level_split_q(balanced);
    rec.layers = static_cast<int>(layers.size());
    IndependentSetResult layer_best{VertexSet{}, Provenance::q_level, 0};
    for (std::size_t i = 0; i < layers.size(); ++i) {
      Graph layer = induced_subgraph(contracted.graph, layers[i]);
      std::vector<Vertex> ids;
      for (const VertexSet& part : connected_components(layer)) {
        if (audit) {
          audit->check("q.layer-component-size", static_cast<int>(part.size()) <= 6 * k,
                       "layer component of " + std::to_string(part.size()) + " vertices > 6k");
        }
        Graph sub = induced_subgraph(layer, part);
        for (Vertex v : box.run(sub).vertices) ids.push_back(layer.label(sub.label(v)));
      }
      if (ids.size() > layer_best.size()) {
        layer_best = {VertexSet(std::move(ids)), Provenance::q_level, static_cast<int>(i)};
      }
    }
    layer_best.vertices = lift_to_parent(contracted.graph, layer_best.vertices);
    verify_solution(c, layer_best.vertices, "approx_component layer");
    rec.size_b = layer_best.size();
    if (layer_best.size() > best.size()) {
      best = std::move(layer_best);
      rec.chosen = 'B';
    }
  }
  verify_solution(c, best.vertices, "approx_component");
  if (record) *record = rec;
  return best;
}

PipelineResult approx_tw(const Graph& g, const TreeDecomposition& td, const BlackBox& box, AuditLog* audit) {
  require_valid(g, td);
  Stopwatch clock;
  PipelineResult out;
  PipelineTrace& trace = out.trace;
  const Vertex n = g.vertex_count();
  trace.k = td.max_bag_size();
  trace.fk = box.ratio(trace.k);
  trace.ell = static_cast<int>(2 * trace.fk);

  IndependentSetResult greedy = greedy_degeneracy(g);
  trace.candidates.push_back(greedy);
  trace.stage_seconds.emplace_back("greedy", clock.lap());
  if (n == 0) {
    out.solution = greedy;
    return out;
  }

  TreeDecomposition nice = make_nice(td, g);
  TreeDecomposition unique = make_leaf_unique(nice, g);
  trace.nice_nodes = static_cast<std::size_t>(nice.node_count());
  const auto leaves = rooted_leaves(unique);
  trace.leaf_count = leaves.size();
  if (audit) {
    audit->check("nice.node-bound", nice.node_count() <= 4 * n,
                 std::to_string(nice.node_count()) + " nice nodes > 4n");
    auto report = validate_td(g, unique);
    audit->check("leaf-unique.valid", report.ok(), report.describe());
    audit->check("leaf-unique.width", unique.max_bag_size() <= trace.k, "leaf-unique repair widened the decomposition");
  }
  trace.stage_seconds.emplace_back("nice", clock.lap());

  trace.candidates.push_back(leaf_unique_candidate(g, unique));
  trace.stage_seconds.emplace_back("leaf-set", clock.lap());

  ChopResult chop = chop_subtrees(g, unique, trace.ell);
  trace.removed = chop.removed.size();
  trace.chop_iterations = chop.iterations;
  if (audit) {
    audit->check("chop.removed-bound",
                 static_cast<std::int64_t>(chop.removed.size()) * trace.ell <=
                     static_cast<std::int64_t>(trace.k) * static_cast<std::int64_t>(leaves.size()),
                 "|X| = " + std::to_string(chop.removed.size()) + " > k|L|/l");
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (Vertex v : chop.removed) owner[static_cast<std::size_t>(v)] = 0;
    bool exact = true;
    for (std::size_t p = 0; p < chop.parts.size(); ++p) {
      const auto& part = chop.parts[p];
      audit->check("chop.part-leaves", rooted_leaves(part.td).size() <= static_cast<std::size_t>(trace.ell),
                   "part with " + std::to_string(rooted_leaves(part.td).size()) + " leaves");
      audit->check("chop.branch-count", branch_nodes(part.td).size() + 1 <= static_cast<std::size_t>(trace.ell),
                   std::to_string(branch_nodes(part.td).size()) + " branch nodes");
      auto report = validate_td(part.graph, part.td);
      audit->check("chop.part-valid", report.ok(), report.describe());
      for (Vertex v : part.graph.labels()) {
        auto& o = owner[static_cast<std::size_t>(v)];
        if (o != -1) exact = false;
        o = static_cast<int>(p) + 1;
      }
    }
    bool separated = true;
    for (auto [u, v] : g.edges()) {
      int a = owner[static_cast<std::size_t>(u)], b = owner[static_cast<std::size_t>(v)];
      if (a > 0 && b > 0 && a != b) separated = false;
    }
    exact = exact && std::none_of(owner.begin(), owner.end(), [](int o) { return o == -1; });
    audit->check("chop.partition", exact, "X and the parts do not partition V");
    audit->check("chop.cross-edges", separated, "an edge joins two parts");
  }
  trace.stage_seconds.emplace_back("chop", clock.lap());

  std::vector<Vertex> joined;
  for (const auto& part : chop.parts) {
    ComponentRecord rec;
    IndependentSetResult s = approx_component(part.graph, part.td, box, audit, &rec);
    trace.components.push_back(rec);
    for (Vertex v : s.vertices) joined.push_back(part.graph.label(v));
  }
  IndependentSetResult components{VertexSet(std::move(joined)), Provenance::components, -1};
  verify_solution(g, components.vertices, "approx_tw components");
  trace.candidates.push_back(std::move(components));
  trace.stage_seconds.emplace_back("components", clock.lap());

  std::size_t best = 0;
  for (std::size_t i = 0; i < trace.candidates.size(); ++i) {
    if (audit) {
      audit->check("candidate-independent", is_independent_set(g, trace.candidates[i].vertices),
                   trace.candidates[i].tag() + " is not independent");
    }
    if (trace.candidates[i].size() > trace.candidates[best].size()) best = i;
  }
  out.solution = trace.candidates[best];
  trace.final_size = out.solution.size();
  if (audit) {
    const std::size_t floor = (static_cast<std::size_t>(n) + trace.k - 1) / static_cast<std::size_t>(trace.k);
    audit->check("guarantee-floor", trace.final_size >= floor,
                 "final " + std::to_string(trace.final_size) + " < ceil(n/(w+1)) = " + std::to_string(floor));
  }
  return out;
}

}  // namespace twmis
