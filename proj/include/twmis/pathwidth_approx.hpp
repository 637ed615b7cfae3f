#pragma once

#include <cstdint>
#include <vector>

#include "twmis/audit.hpp"
#include "twmis/decomposition.hpp"
#include "twmis/solvers.hpp"

namespace twmis {

/// ℓ(v): number of bags of a nice path decomposition that contain v. Throws
/// ContractViolation unless the decomposition is nice with exactly 2n bags.
std::vector<int> vertex_lengths(const Graph& g, const PathDecomposition& nice_path);

/// Vertices grouped by length.
///
/// With k the largest bag size and c = ceil(log2 f(k)), level 0 holds ℓ < 2k, level i
/// (1 <= i <= m = c + 1) holds ℓ in [k·2^i, k·2^(i+1)), and the long vertices have
/// ℓ >= 4k·2^c. The top level ends exactly where the long vertices start.
struct LevelPartition {
  int k = 0;
  std::int64_t fk = 2;
  int m = 0;
  std::vector<int> lengths;
  std::vector<VertexSet> levels;    // V_0..V_m
  std::vector<int> max_length;      // L per level, 1 for an empty level
  VertexSet long_vertices;          // V'
};

/// fk is the (clamped) ratio f(k) of the black box. Same preconditions as vertex_lengths.
LevelPartition level_partition(const Graph& g, const PathDecomposition& nice_path, std::int64_t fk);

/// Blocks of one level, with bags numbered from 1.
///
/// X_r = B_{2Lr} ∩ V_i for r = 1..floor(2n/2L). Every other vertex of the level occurs
/// only in bags 2L(r-1)+1 .. 2Lr-1 for one r in 1..ceil(2n/2L) and goes to Y_r.
/// Blocks may be empty.
struct BlockPartition {
  int big_l = 1;
  std::vector<VertexSet> x_blocks;
  std::vector<VertexSet> y_blocks;
};

/// Throws ContractViolation if the level and lengths do not fit the decomposition.
BlockPartition block_partition(const VertexSet& level, const PathDecomposition& nice_path,
                               const std::vector<int>& lengths);

/// Runs the box on every block and returns the larger of the X-union and the Y-union
/// (ties go to X). The result is tagged pw-level-<level_index>.
IndependentSetResult approx_level(const Graph& g, const BlockPartition& blocks, const BlackBox& box,
                                  int level_index);

/// Best of the greedy candidate and approx_level on every non-empty level. The path
/// decomposition only needs to be valid; it is made nice here. When `audit` is given,
/// the structural bounds of the partition are recorded there. When `candidates` is
/// given, every candidate is appended to it.
IndependentSetResult approx_pw(const Graph& g, const PathDecomposition& pd, const BlackBox& box,
                               AuditLog* audit = nullptr, std::vector<IndependentSetResult>* candidates = nullptr);

}  // namespace twmis
