#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "twmis/decomposition.hpp"
#include "twmis/graph.hpp"

namespace twmis {

/// Which part of the pipeline produced a solution.
enum class Provenance { greedy, leaf_set, pw_level, q_level, exact, black_box, components };

struct IndependentSetResult {
  VertexSet vertices;
  Provenance provenance = Provenance::greedy;
  int level = -1;  // level index for pw_level / q_level

  std::size_t size() const noexcept { return vertices.size(); }
  /// "greedy", "leaf-set", "pw-level-2", "Q-level-0", "exact", "black-box", "components".
  std::string tag() const;
};

/// Throws ContractViolation if s is not independent in g. Compiled to a no-op unless
/// TWMIS_VERIFY_SOLUTIONS is defined; every solver and pipeline stage calls it on its
/// output.
void verify_solution(const Graph& g, const VertexSet& s, const char* where);

/// Maximum independent set by branch and bound (branch on a highest-degree vertex,
/// degree 0/1 reductions, clique-cover upper bound). Throws BoxRefusal when
/// n > budget or n > 64.
IndependentSetResult exact_mis_bruteforce(const Graph& g, int budget = 30);

/// Maximum independent set by the subset DP over a nice decomposition, with traceback.
/// Throws ContractViolation if td is not nice, InvalidDecomposition if it is not valid,
/// and BoxRefusal if a bag has more than width_budget vertices or the tables would
/// exceed 2^27 entries in total.
IndependentSetResult exact_mis_td_dp(const Graph& g, const TreeDecomposition& td, int width_budget = 20);

/// Repeatedly takes a vertex of minimum degree (lowest identifier on ties) and deletes
/// it with its neighbours. Size at least n/(tw+1).
IndependentSetResult greedy_degeneracy(const Graph& g);

/// Ramsey-style clique removal: the best independent set found while repeatedly
/// deleting the clique returned by the Ramsey recursion.
VertexSet clique_removal(const Graph& g);

/// A pluggable n/f(n) approximator.
struct BlackBox {
  std::string name;
  std::function<VertexSet(const Graph&)> solve;
  std::function<std::int64_t(std::int64_t)> f;  // declared ratio function, unclamped

  /// f(n) clamped to [2, n]; 2 when n < 2.
  std::int64_t ratio(std::int64_t n) const;
  /// Runs solve and verifies the output.
  IndependentSetResult run(const Graph& g) const;
};

/// f(n) = n; delegates to exact_mis_bruteforce and refuses graphs over the budget.
BlackBox box_exact(int budget = 30);

/// f(n) = max(2, floor(log2 n)); polynomial time.
BlackBox box_clique_removal();

/// "exact", "exact:<budget>" or "clique-removal"; nullopt otherwise.
std::optional<BlackBox> box_from_name(const std::string& name);

/// Baseline that splits the vertices into r classes (v mod r), runs the exact DP on
/// each class with the bags restricted to it and keeps the best class. The smallest r
/// whose restricted widths fit in width_budget is used, so the result is at least α/r.
struct ClassSplitResult {
  IndependentSetResult solution;
  int classes = 1;
};
ClassSplitResult class_split_baseline(const Graph& g, const TreeDecomposition& td, int width_budget = 16);

}  // namespace twmis
