#include "twmis/pathwidth_approx.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "twmis/errors.hpp"
#include "twmis/transforms.hpp"

namespace twmis {
namespace {

int ceil_log2(std::int64_t x) {
  return x <= 1 ? 0 : static_cast<int>(std::bit_width(static_cast<std::uint64_t>(x - 1)));
}

VertexSet solve_blocks(const Graph& g, const std::vector<VertexSet>& blocks, const BlackBox& box) {
  std::vector<Vertex> ids;
  for (const auto& block : blocks) {
    if (block.empty()) continue;
    Graph sub = induced_subgraph(g, block);
    VertexSet local = box.run(sub).vertices;
    for (Vertex v : local) ids.push_back(sub.label(v));
  }
  return VertexSet(std::move(ids));
}

// true when no edge of g joins two different blocks
bool blocks_separated(const Graph& g, const std::vector<VertexSet>& blocks) {
  std::vector<int> block_of(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Vertex v : blocks[b]) block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
  }
  for (auto [u, v] : g.edges()) {
    int a = block_of[static_cast<std::size_t>(u)], b = block_of[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0 && a != b) return false;
  }
  return true;
}

}  // namespace

std::vector<int> vertex_lengths(const Graph& g, const PathDecomposition& nice_path) {
  const Vertex n = g.vertex_count();
  if (nice_path.bags.size() != 2 * static_cast<std::size_t>(n) || !is_nice_path(nice_path)) {
    throw ContractViolation("vertex_lengths: expected a nice path decomposition with " + std::to_string(2 * n) +
                            " bags");
  }
  std::vector<int> lengths(static_cast<std::size_t>(n), 0);
  for (const auto& bag : nice_path.bags) {
    for (Vertex v : bag) {
      if (!g.contains(v)) throw ContractViolation("vertex_lengths: bag vertex out of range");
      ++lengths[static_cast<std::size_t>(v)];
    }
  }
  return lengths;
}

LevelPartition level_partition(const Graph& g, const PathDecomposition& nice_path, std::int64_t fk) {
  LevelPartition lp;
  lp.lengths = vertex_lengths(g, nice_path);
  lp.k = nice_path.max_bag_size();
  lp.fk = std::max<std::int64_t>(fk, 2);
  lp.m = ceil_log2(lp.fk) + 1;
  const std::int64_t k = lp.k;
  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(lp.m) + 1);
  std::vector<Vertex> long_ids;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::int64_t len = lp.lengths[static_cast<std::size_t>(v)];
    if (len < 2 * k) {
      members[0].push_back(v);
      continue;
    }
    int i = 1;
    while (i <= lp.m && len >= (k << (i + 1))) ++i;
    if (i > lp.m) {
      long_ids.push_back(v);
    } else {
      members[static_cast<std::size_t>(i)].push_back(v);
    }
  }
  for (auto& ids : members) {
    int big_l = 1;
    for (Vertex v : ids) big_l = std::max(big_l, lp.lengths[static_cast<std::size_t>(v)]);
    lp.max_length.push_back(big_l);
    lp.levels.push_back(VertexSet::from_sorted(std::move(ids)));
  }
  lp.long_vertices = VertexSet::from_sorted(std::move(long_ids));
  return lp;
}

BlockPartition block_partition(const VertexSet& level, const PathDecomposition& nice_path,
                               const std::vector<int>& lengths) {
  const std::size_t bag_count = nice_path.bags.size();
  if (bag_count != 2 * lengths.size()) throw ContractViolation("block_partition: lengths do not match the decomposition");
  BlockPartition out;
  for (Vertex v : level) {
    if (v < 0 || static_cast<std::size_t>(v) >= lengths.size()) {
      throw ContractViolation("block_partition: level vertex out of range");
    }
    out.big_l = std::max(out.big_l, lengths[static_cast<std::size_t>(v)]);
  }
  const std::size_t span = 2 * static_cast<std::size_t>(out.big_l);
  const std::size_t p = bag_count / span;
  const std::size_t q = (bag_count + span - 1) / span;
  std::vector<char> in_x(lengths.size(), 0);
  for (std::size_t r = 1; r <= p; ++r) {
    VertexSet x = nice_path.bags[span * r - 1].intersect(level);
    for (Vertex v : x) in_x[static_cast<std::size_t>(v)] = 1;
    out.x_blocks.push_back(std::move(x));
  }
  // first and last bag (1-based) of each remaining level vertex
  std::vector<std::size_t> first(lengths.size(), 0), last(lengths.size(), 0);
  for (std::size_t i = 0; i < bag_count; ++i) {
    for (Vertex v : nice_path.bags[i]) {
      auto vi = static_cast<std::size_t>(v);
      if (first[vi] == 0) first[vi] = i + 1;
      last[vi] = i + 1;
    }
  }
  std::vector<std::vector<Vertex>> ys(q);
  for (Vertex v : level) {
    auto vi = static_cast<std::size_t>(v);
    if (in_x[vi]) continue;
    if (first[vi] == 0) throw ContractViolation("block_partition: level vertex occurs in no bag");
    const std::size_t r = first[vi] / span + 1;
    if (last[vi] > span * r - 1 || r > q) {
      throw ContractViolation("block_partition: vertex " + std::to_string(v) + " crosses a block boundary");
    }
    ys[r - 1].push_back(v);
  }
  for (auto& y : ys) out.y_blocks.push_back(VertexSet::from_sorted(std::move(y)));
  return out;
}

IndependentSetResult approx_level(const Graph& g, const BlockPartition& blocks, const BlackBox& box, int level_index) {
  VertexSet x = solve_blocks(g, blocks.x_blocks, box);
  VertexSet y = solve_blocks(g, blocks.y_blocks, box);
  IndependentSetResult out{x.size() >= y.size() ? std::move(x) : std::move(y), Provenance::pw_level, level_index};
  verify_solution(g, out.vertices, "approx_level");
  return out;
}

IndependentSetResult approx_pw(const Graph& g, const PathDecomposition& pd, const BlackBox& box, AuditLog* audit,
                               std::vector<IndependentSetResult>* candidates) {
  PathDecomposition nice = make_nice_path(pd, g);
  IndependentSetResult best = greedy_degeneracy(g);
  if (candidates) candidates->push_back(best);
  const Vertex n = g.vertex_count();
  if (n == 0) return best;

  const int k = nice.max_bag_size();
  LevelPartition lp = level_partition(g, nice, box.ratio(k));
  if (audit) {
    std::int64_t total = 0;
    for (int len : lp.lengths) total += len;
    audit->check("pw.length-sum", total <= 2 * static_cast<std::int64_t>(n) * k,
                 "sum of lengths " + std::to_string(total) + " > 2nk");
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto& level : lp.levels) {
      for (Vertex v : level) ++seen[static_cast<std::size_t>(v)];
    }
    for (Vertex v : lp.long_vertices) ++seen[static_cast<std::size_t>(v)];
    bool exact = std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
    audit->check("pw.partition-exact", exact, "levels and V' do not partition V");
    audit->check("pw.long-vertices", 2 * lp.fk * static_cast<std::int64_t>(lp.long_vertices.size()) <= n,
                 "|V'| = " + std::to_string(lp.long_vertices.size()) + " > n/(2f(k))");
  }

  for (std::size_t i = 0; i < lp.levels.size(); ++i) {
    const VertexSet& level = lp.levels[i];
    if (level.empty()) continue;
    BlockPartition blocks = block_partition(level, nice, lp.lengths);
    if (audit) {
      std::size_t covered = 0;
      for (const auto& x : blocks.x_blocks) {
        covered += x.size();
        audit->check("pw.x-block-size", static_cast<int>(x.size()) <= k,
                     "|X_r| = " + std::to_string(x.size()) + " > k = " + std::to_string(k));
      }
      for (const auto& y : blocks.y_blocks) {
        covered += y.size();
        audit->check("pw.y-block-size", static_cast<int>(y.size()) <= 4 * k,
                     "|Y_r| = " + std::to_string(y.size()) + " > 4k = " + std::to_string(4 * k));
      }
      audit->check("pw.block-cover", covered == level.size(), "X and Y blocks do not cover the level");
      audit->check("pw.cross-block-edges", blocks_separated(g, blocks.x_blocks) && blocks_separated(g, blocks.y_blocks),
                   "an edge joins two blocks of level " + std::to_string(i));
    }
    IndependentSetResult candidate = approx_level(g, blocks, box, static_cast<int>(i));
    if (candidates) candidates->push_back(candidate);
    if (candidate.size() > best.size()) best = std::move(candidate);
  }
  verify_solution(g, best.vertices, "approx_pw");
  return best;
}

}  // namespace twmis
