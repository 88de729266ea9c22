#include "sdfvs/oracle.hpp"

#include <algorithm>

#include "sdfvs/solver.hpp"

namespace sdfvs {

namespace {

void check_size(const Digraph& g, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices)
    throw OracleBudgetError("oracle limited to " + std::to_string(budget.max_vertices) +
                            " vertices");
}

// lexicographic combinations of `pool`, size `want`, fed to `take`;
// `take` returns true to stop early
struct SubsetWalker {
  const std::vector<int>& pool;
  long long budget;
  long long used = 0;

  template <class F>
  bool walk(int want, F take) {
    std::vector<int> pick;
    return rec(0, want, pick, take);
  }

 private:
  template <class F>
  bool rec(std::size_t from, int remaining, std::vector<int>& pick, F& take) {
    if (remaining == 0) {
      if (++used > budget) throw OracleBudgetError("oracle subset budget exceeded");
      return take(pick);
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(remaining) <= pool.size(); ++i) {
      pick.push_back(pool[i]);
      if (rec(i + 1, remaining - 1, pick, take)) {
        pick.pop_back();
        return true;
      }
      pick.pop_back();
    }
    return false;
  }
};

Bitset to_set(const Digraph& g, const std::vector<int>& ids) {
  Bitset b = g.empty_set();
  for (int v : ids) b.set(v);
  return b;
}

}  // namespace

std::optional<Solution> brute_force_solve(const EdgeInstance& inst, const OracleBudget& budget) {
  check_size(inst.graph, budget);
  std::vector<int> pool = (inst.graph.alive() - inst.graph.undeletable()).to_vector();
  std::optional<Solution> found;
  SubsetWalker walker{pool, budget.max_subsets};
  int limit = std::min<int>(inst.budget, static_cast<int>(pool.size()));
  for (int size = 0; size <= limit && !found; ++size) {
    walker.walk(size, [&](const std::vector<int>& pick) {
      if (!verify_solution(inst, to_set(inst.graph, pick))) return false;
      Solution s;
      s.deleted = pick;
      s.certified = true;
      found = std::move(s);
      return true;
    });
  }
  return found;
}

SeparatorList brute_force_important_separators(const Digraph& g, const Bitset& x, const Bitset& y,
                                               int k, const OracleBudget& budget) {
  check_size(g, budget);
  SeparatorList out;
  MinCutResult probe = min_vertex_cut(g, x, y, g.vertex_count());
  if (probe.status == MinCutResult::Status::inseparable) {
    out.inseparable = true;
    return out;
  }

  std::vector<int> pool = (g.alive() - x - y - g.undeletable()).to_vector();
  // collect every separator of size <= k with its forward reach
  struct Sep {
    Bitset vertices;
    Bitset reach;
  };
  std::vector<Sep> seps;
  SubsetWalker walker{pool, budget.max_subsets};
  int limit = std::min<int>(k, static_cast<int>(pool.size()));
  for (int size = 0; size <= limit; ++size) {
    walker.walk(size, [&](const std::vector<int>& pick) {
      Bitset w = to_set(g, pick);
      Bitset reach = reach_forward(g, x, w);
      if (!reach.intersects(y)) seps.push_back({std::move(w), std::move(reach)});
      return false;
    });
  }

  for (const Sep& cand : seps) {
    if (!is_minimal_separator(g, x, y, cand.vertices)) continue;
    bool dominated = false;
    for (const Sep& other : seps) {
      if (other.vertices.count() > cand.vertices.count()) continue;
      if (cand.reach.subset_of(other.reach) && !(cand.reach == other.reach)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.items.push_back({cand.vertices, x, y});
  }
  std::sort(out.items.begin(), out.items.end(), [](const Separator& a, const Separator& b) {
    if (a.vertices.count() != b.vertices.count()) return a.vertices.count() < b.vertices.count();
    return a.vertices.to_vector() < b.vertices.to_vector();
  });
  return out;
}

Bitset brute_force_critical(const Digraph& g, const std::vector<char>& s_mask, const Bitset& t0,
                            int k, const OracleBudget& budget) {
  check_size(g, budget);
  if (t0.none()) throw ContractViolation("brute_force_critical: T0 must be nonempty");
  Bitset result = g.empty_set();
  if (k <= 0) return result;

  EndpointSets ends = endpoint_sets(g, s_mask);
  std::vector<std::pair<int, int>> s_arcs;
  for (int i = 0; i < g.arc_count(); ++i)
    if (s_mask[static_cast<std::size_t>(i)]) s_arcs.emplace_back(g.arc(i).tail, g.arc(i).head);

  (ends.s_plus - t0).for_each([&](int v) {
    std::vector<int> pool = (g.alive() - t0 - g.singleton(v)).to_vector();
    SubsetWalker walker{pool, budget.max_subsets};
    bool witnessed = false;
    int limit = std::min<int>(k - 1, static_cast<int>(pool.size()));
    for (int size = 0; size <= limit && !witnessed; ++size) {
      walker.walk(size, [&](const std::vector<int>& pick) {
        Bitset w = to_set(g, pick);
        w.set(v);
        Bitset reach = reach_forward(g, t0, w);
        bool crit_edge = false;
        for (auto [a, b] : s_arcs) {
          if (w.test(a) || w.test(b)) {
            if (b == v && !w.test(a) && reach.test(a)) crit_edge = true;
            continue;
          }
          if (reach.test(a)) return false;  // some S-arc still traversable
        }
        if (!crit_edge) return false;
        witnessed = true;
        return true;
      });
    }
    if (witnessed) result.set(v);
  });
  return result;
}

}  // namespace sdfvs
