#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twmis/audit.hpp"
#include "twmis/decomposition.hpp"
#include "twmis/solvers.hpp"

namespace twmis {

/// One vertex of occurrence count 1 (the smallest) from every leaf bag. Throws
/// ContractViolation if some leaf has no such vertex.
IndependentSetResult leaf_unique_candidate(const Graph& g, const TreeDecomposition& td);

/// Layer d holds the vertices whose highest bag is at depth d (root depth 0); there are
/// depth+1 layers. Throws ContractViolation if tq is not rooted.
std::vector<VertexSet> level_split_q(const TreeDecomposition& tq);

/// What happened to one component of G - X.
struct ComponentRecord {
  std::size_t vertices = 0;
  std::size_t leaves = 0;
  std::size_t q_size = 0;
  std::size_t branch_nodes = 0;
  std::size_t size_a = 0;                 // approx_pw on C - Q
  std::optional<std::size_t> size_b;      // best layer of C[Q]; absent when Q is empty
  int layers = 0;
  char chosen = 'A';
};

/// Larger of the two branches for one chopped component (ties go to branch A):
/// A runs approx_pw on C - Q with the path decomposition left after deleting branch
/// nodes; B contracts to the branch nodes, reduces depth, splits C[Q] into layers and
/// runs the box on every connected component of every layer.
IndependentSetResult approx_component(const Graph& c, const TreeDecomposition& tc, const BlackBox& box,
                                      AuditLog* audit = nullptr, ComponentRecord* record = nullptr);

struct PipelineTrace {
  int k = 0;                  // largest bag of the input decomposition
  std::int64_t fk = 2;        // clamped f(k)
  int ell = 0;                // leaf bound used for chopping, 2·f(k)
  std::size_t nice_nodes = 0;
  std::size_t leaf_count = 0; // leaves after the leaf-unique repair
  std::size_t removed = 0;    // |X|
  int chop_iterations = 0;
  std::vector<ComponentRecord> components;
  std::vector<IndependentSetResult> candidates;
  std::size_t final_size = 0;
  std::vector<std::pair<std::string, double>> stage_seconds;
};

struct PipelineResult {
  IndependentSetResult solution;
  PipelineTrace trace;
};

/// Best of the greedy candidate, the leaf-unique candidate and the union of
/// approx_component over the parts left by chop_subtrees(ℓ = 2·f(k)). Throws
/// InvalidDecomposition before doing anything if td is not valid for g.
PipelineResult approx_tw(const Graph& g, const TreeDecomposition& td, const BlackBox& box, AuditLog* audit = nullptr);

}  // namespace twmis
