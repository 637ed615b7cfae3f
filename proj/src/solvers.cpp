#include "twmis/solvers.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <set>

#include "twmis/errors.hpp"
#include "twmis/transforms.hpp"

namespace twmis {

std::string IndependentSetResult::tag() const {
  switch (provenance) {
    case Provenance::greedy: return "greedy";
    case Provenance::leaf_set: return "leaf-set";
    case Provenance::pw_level: return "pw-level-" + std::to_string(level);
    case Provenance::q_level: return "Q-level-" + std::to_string(level);
    case Provenance::exact: return "exact";
    case Provenance::black_box: return "black-box";
    case Provenance::components: return "components";
  }
  return "unknown";
}

void verify_solution([[maybe_unused]] const Graph& g, [[maybe_unused]] const VertexSet& s,
                     [[maybe_unused]] const char* where) {
#ifdef TWMIS_VERIFY_SOLUTIONS
  if (!is_independent_set(g, s)) throw ContractViolation(std::string(where) + ": output is not independent");
#endif
}

// ---------------------------------------------------------------------------
// branch and bound

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : n_(g.vertex_count()), adj_(static_cast<std::size_t>(n_), 0) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u : g.neighbors(v)) adj_[static_cast<std::size_t>(v)] |= bit(u);
    }
  }

  Mask solve(Mask start_best) {
    best_ = start_best;
    best_size_ = std::popcount(start_best);
    search(n_ == 64 ? ~Mask{0} : bit(n_) - 1, 0);
    return best_;
  }

 private:
  Mask nbr(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  // greedy partition of p into cliques; the count bounds α(G[p])
  int clique_cover(Mask p) const {
    std::vector<Mask> cliques;
    for (Mask rest = p; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      bool placed = false;
      for (Mask& c : cliques) {
        if ((c & ~nbr(v)) == 0) {
          c |= bit(v);
          placed = true;
          break;
        }
      }
      if (!placed) cliques.push_back(bit(v));
    }
    return static_cast<int>(cliques.size());
  }

  void search(Mask p, Mask chosen) {
    for (bool changed = true; changed;) {
      changed = false;
      for (Mask rest = p; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        if (!(p & bit(v))) continue;
        int d = std::popcount(nbr(v) & p);
        if (d <= 1) {
          chosen |= bit(v);
          p &= ~(bit(v) | nbr(v));
          changed = true;
        }
      }
    }
    const int size = std::popcount(chosen);
    if (p == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + clique_cover(p) <= best_size_) return;
    int pick = -1, pick_degree = -1;
    for (Mask rest = p; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int d = std::popcount(nbr(v) & p);
      if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    search(p & ~(bit(pick) | nbr(pick)), chosen | bit(pick));
    search(p & ~bit(pick), chosen);
  }

  int n_;
  std::vector<Mask> adj_;
  Mask best_ = 0;
  int best_size_ = 0;
};

}  // namespace

IndependentSetResult exact_mis_bruteforce(const Graph& g, int budget) {
  const Vertex n = g.vertex_count();
  if (n > budget || n > 64) {
    throw BoxRefusal("exact solver refuses a graph with " + std::to_string(n) + " vertices (budget " +
                     std::to_string(std::min(budget, 64)) + ")");
  }
  Mask start = 0;
  for (Vertex v : greedy_degeneracy(g).vertices) start |= bit(v);
  Mask best = BranchAndBound(g).solve(start);
  std::vector<Vertex> ids;
  for (; best; best &= best - 1) ids.push_back(static_cast<Vertex>(std::countr_zero(best)));
  IndependentSetResult out{VertexSet::from_sorted(std::move(ids)), Provenance::exact, -1};
  verify_solution(g, out.vertices, "exact_mis_bruteforce");
  return out;
}

// ---------------------------------------------------------------------------
// decomposition DP

namespace {

constexpr int kNegative = std::numeric_limits<int>::min() / 4;

// position of each vertex of `from` inside `to`, or -1
std::vector<int> positions_in(const VertexSet& from, const VertexSet& to) {
  std::vector<int> pos;
  pos.reserve(from.size());
  for (Vertex v : from) {
    auto it = std::lower_bound(to.begin(), to.end(), v);
    pos.push_back(it != to.end() && *it == v ? static_cast<int>(it - to.begin()) : -1);
  }
  return pos;
}

std::uint32_t translate(std::uint32_t mask, const std::vector<int>& pos) {
  std::uint32_t out = 0;
  for (; mask; mask &= mask - 1) {
    int p = pos[static_cast<std::size_t>(std::countr_zero(mask))];
    if (p >= 0) out |= std::uint32_t{1} << p;
  }
  return out;
}

}  // namespace

IndependentSetResult exact_mis_td_dp(const Graph& g, const TreeDecomposition& td, int width_budget) {
  if (auto why = nice_violation(td)) throw ContractViolation("exact_mis_td_dp: decomposition is not nice: " + *why);
  require_valid(g, td);
  const int budget = std::min(width_budget, 30);
  if (td.max_bag_size() > budget) {
    throw BoxRefusal("decomposition DP refuses bags of size " + std::to_string(td.max_bag_size()) + " (budget " +
                     std::to_string(budget) + ")");
  }
  std::uint64_t entries = 0;
  for (const auto& bag : td.bags()) entries += std::uint64_t{1} << bag.size();
  if (entries > (std::uint64_t{1} << 27)) throw BoxRefusal("decomposition DP tables would be too large");

  auto rt = rooted_view(td);
  const std::size_t count = static_cast<std::size_t>(td.node_count());
  std::vector<std::vector<int>> table(count);
  std::vector<std::vector<std::uint32_t>> conflicts(count);  // per bag position: adjacent positions

  for (Node t : rt.postorder()) {
    auto ti = static_cast<std::size_t>(t);
    const VertexSet& bag = td.bag(t);
    const std::size_t b = bag.size();
    auto& conf = conflicts[ti];
    conf.assign(b, 0);
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        if (i != j && g.has_edge(bag[i], bag[j])) conf[i] |= std::uint32_t{1} << j;
      }
    }
    auto independent = [&](std::uint32_t s) {
      for (std::uint32_t rest = s; rest; rest &= rest - 1) {
        if (conf[static_cast<std::size_t>(std::countr_zero(rest))] & s) return false;
      }
      return true;
    };
    auto& tab = table[ti];
    tab.assign(std::size_t{1} << b, kNegative);
    const auto& kids = rt.children[ti];
    if (kids.empty()) {
      for (std::uint32_t s = 0; s < tab.size(); ++s) {
        if (independent(s)) tab[s] = std::popcount(s);
      }
    } else if (kids.size() == 2) {
      const auto& a = table[static_cast<std::size_t>(kids[0])];
      const auto& c = table[static_cast<std::size_t>(kids[1])];
      for (std::uint32_t s = 0; s < tab.size(); ++s) {
        if (a[s] != kNegative && c[s] != kNegative) tab[s] = a[s] + c[s] - std::popcount(s);
      }
    } else {
      const Node child = kids[0];
      const VertexSet& child_bag = td.bag(child);
      const auto& ct = table[static_cast<std::size_t>(child)];
      if (child_bag.size() < b) {  // introduce
        auto pos = positions_in(bag, child_bag);
        for (std::uint32_t s = 0; s < tab.size(); ++s) {
          if (!independent(s)) continue;
          int below = ct[translate(s, pos)];
          if (below == kNegative) continue;
          int added = 0;
          for (std::size_t i = 0; i < b; ++i) added += (pos[i] < 0 && (s >> i & 1)) ? 1 : 0;
          tab[s] = below + added;
        }
      } else {  // forget
        auto pos = positions_in(bag, child_bag);
        std::uint32_t forgotten = 0;
        auto in_parent = positions_in(child_bag, bag);
        for (std::size_t j = 0; j < in_parent.size(); ++j) {
          if (in_parent[j] < 0) forgotten |= std::uint32_t{1} << j;
        }
        for (std::uint32_t s = 0; s < tab.size(); ++s) {
          std::uint32_t cs = translate(s, pos);
          tab[s] = std::max(ct[cs], ct[cs | forgotten]);
        }
      }
    }
  }

  // traceback
  std::vector<std::uint32_t> chosen(count, 0);
  {
    const auto& root_table = table[static_cast<std::size_t>(rt.root)];
    std::uint32_t best = 0;
    for (std::uint32_t s = 0; s < root_table.size(); ++s) {
      if (root_table[s] > root_table[best]) best = s;
    }
    chosen[static_cast<std::size_t>(rt.root)] = best;
  }
  std::vector<Vertex> ids;
  for (Node t : rt.preorder) {
    auto ti = static_cast<std::size_t>(t);
    const VertexSet& bag = td.bag(t);
    const std::uint32_t s = chosen[ti];
    for (std::uint32_t rest = s; rest; rest &= rest - 1) ids.push_back(bag[static_cast<std::size_t>(std::countr_zero(rest))]);
    const auto& kids = rt.children[ti];
    if (kids.size() == 2) {
      chosen[static_cast<std::size_t>(kids[0])] = s;
      chosen[static_cast<std::size_t>(kids[1])] = s;
    } else if (kids.size() == 1) {
      const Node child = kids[0];
      const VertexSet& child_bag = td.bag(child);
      std::uint32_t cs = translate(s, positions_in(bag, child_bag));
      if (child_bag.size() > bag.size()) {
        auto in_parent = positions_in(child_bag, bag);
        std::uint32_t forgotten = 0;
        for (std::size_t j = 0; j < in_parent.size(); ++j) {
          if (in_parent[j] < 0) forgotten |= std::uint32_t{1} << j;
        }
        const auto& ct = table[static_cast<std::size_t>(child)];
        if (ct[cs] < ct[cs | forgotten]) cs |= forgotten;
      }
      chosen[static_cast<std::size_t>(child)] = cs;
    }
  }
  IndependentSetResult out{VertexSet(std::move(ids)), Provenance::exact, -1};
  verify_solution(g, out.vertices, "exact_mis_td_dp");
  return out;
}

// ---------------------------------------------------------------------------
// greedy and black boxes

IndependentSetResult greedy_degeneracy(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> degree(static_cast<std::size_t>(n));
  std::set<std::pair<Vertex, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[static_cast<std::size_t>(v)] = g.degree(v);
    queue.emplace(g.degree(v), v);
  }
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  auto drop = [&](Vertex v) {
    gone[static_cast<std::size_t>(v)] = 1;
    queue.erase({degree[static_cast<std::size_t>(v)], v});
  };
  std::vector<Vertex> picked;
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    picked.push_back(v);
    drop(v);
    for (Vertex u : g.neighbors(v)) {
      if (gone[static_cast<std::size_t>(u)]) continue;
      drop(u);
      for (Vertex w : g.neighbors(u)) {
        auto wi = static_cast<std::size_t>(w);
        if (gone[wi]) continue;
        queue.erase({degree[wi], w});
        queue.emplace(--degree[wi], w);
      }
    }
  }
  IndependentSetResult out{VertexSet(std::move(picked)), Provenance::greedy, -1};
  verify_solution(g, out.vertices, "greedy_degeneracy");
  return out;
}

namespace {

struct Ramsey {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;
};

Ramsey ramsey(const Graph& g, const std::vector<Vertex>& vs) {
  if (vs.empty()) return {};
  const Vertex v = vs.front();
  std::vector<Vertex> in, out;
  for (std::size_t i = 1; i < vs.size(); ++i) (g.has_edge(v, vs[i]) ? in : out).push_back(vs[i]);
  Ramsey a = ramsey(g, in);
  Ramsey b = ramsey(g, out);
  a.clique.push_back(v);
  b.independent.push_back(v);
  Ramsey r;
  r.clique = a.clique.size() >= b.clique.size() ? std::move(a.clique) : std::move(b.clique);
  r.independent = b.independent.size() >= a.independent.size() ? std::move(b.independent) : std::move(a.independent);
  return r;
}

}  // namespace

VertexSet clique_removal(const Graph& g) {
  std::vector<Vertex> rest(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = static_cast<Vertex>(i);
  std::vector<Vertex> best;
  while (!rest.empty()) {
    Ramsey r = ramsey(g, rest);
    if (r.independent.size() > best.size()) best = r.independent;
    std::sort(r.clique.begin(), r.clique.end());
    std::vector<Vertex> next;
    std::set_difference(rest.begin(), rest.end(), r.clique.begin(), r.clique.end(), std::back_inserter(next));
    rest = std::move(next);
  }
  return VertexSet(std::move(best));
}

std::int64_t BlackBox::ratio(std::int64_t n) const {
  return std::clamp<std::int64_t>(f(n), 2, std::max<std::int64_t>(n, 2));
}

IndependentSetResult BlackBox::run(const Graph& g) const {
  IndependentSetResult out{solve(g), Provenance::black_box, -1};
  verify_solution(g, out.vertices, name.c_str());
  return out;
}

BlackBox box_exact(int budget) {
  return {"exact:" + std::to_string(budget),
          [budget](const Graph& g) { return exact_mis_bruteforce(g, budget).vertices; },
          [](std::int64_t n) { return n; }};
}

BlackBox box_clique_removal() {
  return {"clique-removal", [](const Graph& g) { return clique_removal(g); },
          [](std::int64_t n) {
            return n < 1 ? std::int64_t{2} : std::max<std::int64_t>(2, std::bit_width(static_cast<std::uint64_t>(n)) - 1);
          }};
}

std::optional<BlackBox> box_from_name(const std::string& name) {
  if (name == "clique-removal") return box_clique_removal();
  if (name == "exact") return box_exact();
  if (name.rfind("exact:", 0) == 0) {
    int budget = 0;
    const char* first = name.data() + 6;
    const char* last = name.data() + name.size();
    auto [end, ec] = std::from_chars(first, last, budget);
    if (ec == std::errc() && end == last && first != last && budget >= 0) return box_exact(budget);
  }
  return std::nullopt;
}

ClassSplitResult class_split_baseline(const Graph& g, const TreeDecomposition& td, int width_budget) {
  require_valid(g, td);
  const Vertex n = g.vertex_count();
  int r = 1;
  for (;; ++r) {
    int widest = 0;
    for (const auto& bag : td.bags()) {
      std::vector<int> per_class(static_cast<std::size_t>(r), 0);
      for (Vertex v : bag) widest = std::max(widest, ++per_class[static_cast<std::size_t>(v % r)]);
    }
    if (widest <= width_budget) break;
  }
  ClassSplitResult best{{VertexSet{}, Provenance::exact, -1}, r};
  for (int c = 0; c < r && c < std::max<Vertex>(n, 1); ++c) {
    std::vector<Vertex> members;
    std::vector<Vertex> local(static_cast<std::size_t>(n), -1);
    for (Vertex v = c; v < n; v += r) {
      local[static_cast<std::size_t>(v)] = static_cast<Vertex>(members.size());
      members.push_back(v);
    }
    const VertexSet part = VertexSet::from_sorted(members);
    Graph sub = induced_subgraph(g, part);
    TreeDecomposition restricted = td.relabel(local);
    auto solution = exact_mis_td_dp(sub, make_nice(restricted, sub), width_budget);
    if (solution.size() > best.solution.size()) best.solution.vertices = lift_to_parent(sub, solution.vertices);
  }
  verify_solution(g, best.solution.vertices, "class_split_baseline");
  return best;
}

}  // namespace twmis
