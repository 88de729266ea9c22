#pragma once

#include <map>
#include <random>
#include <vector>

#include "sdfvs/instances.hpp"
#include "sdfvs/solver.hpp"

namespace sdfvs::testing {

inline Bitset bits(int n, std::initializer_list<int> ids) {
  return Bitset::of(static_cast<std::size_t>(n), ids);
}

inline Digraph from_arcs(int n, std::vector<Arc> arcs, std::initializer_list<int> undeletable = {}) {
  return Digraph::build(n, arcs, Bitset::of(static_cast<std::size_t>(n), undeletable));
}

// 0 -> 1 -> ... -> n-1
inline Digraph path_graph(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return from_arcs(n, std::move(arcs));
}

inline Digraph cycle_graph(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return from_arcs(n, std::move(arcs));
}

// 0->1, 0->2, 1->3, 2->3
inline Digraph diamond() { return from_arcs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

inline Digraph bidirected_clique(int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  return from_arcs(n, std::move(arcs));
}

inline EdgeInstance all_arcs_instance(Digraph g, int k) {
  EdgeInstance inst;
  inst.s_mask.assign(static_cast<std::size_t>(g.arc_count()), 1);
  inst.graph = std::move(g);
  inst.budget = k;
  return inst;
}

// The worked example behind the exact-shadow/important-separator remark:
// vertices a_1..a_r each pointing at every terminal t_1..t_k, b_i -> a_i,
// and c_{i,j} -> {a_i, a_j}.
struct RemarkGraph {
  Digraph g;
  Bitset terminals;
  std::vector<int> a, b, t;
  std::map<std::pair<int, int>, int> c;
};

inline RemarkGraph remark_graph(int r, int k) {
  RemarkGraph out;
  int next = 0;
  for (int i = 0; i < k; ++i) out.t.push_back(next++);
  for (int i = 0; i < r; ++i) out.a.push_back(next++);
  for (int i = 0; i < r; ++i) out.b.push_back(next++);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) out.c[{i, j}] = next++;

  std::vector<Arc> arcs;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j) arcs.push_back({out.a[i], out.t[j]});
  for (int i = 0; i < r; ++i) arcs.push_back({out.b[i], out.a[i]});
  for (auto& [ij, cv] : out.c) {
    arcs.push_back({cv, out.a[ij.first]});
    arcs.push_back({cv, out.a[ij.second]});
  }
  out.g = from_arcs(next, std::move(arcs));
  out.terminals = Bitset(static_cast<std::size_t>(next));
  for (int tv : out.t) out.terminals.set(tv);
  return out;
}

inline Digraph random_digraph(std::mt19937_64& rng, int n, int max_m, double undeletable_p = 0.0) {
  int m = max_m > 0 ? static_cast<int>(rng() % static_cast<std::uint64_t>(max_m + 1)) : 0;
  std::vector<Arc> arcs;
  for (int i = 0; i < m; ++i) {
    int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    arcs.push_back({u, v});
  }
  Bitset undel(static_cast<std::size_t>(n));
  if (undeletable_p > 0) {
    for (int v = 0; v < n; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < undeletable_p) undel.set(v);
  }
  return Digraph::build(n, arcs, undel);
}

inline Bitset random_subset(std::mt19937_64& rng, const Bitset& pool, int max_size) {
  std::vector<int> ids = pool.to_vector();
  Bitset out(pool.capacity());
  if (ids.empty() || max_size <= 0) return out;
  int size = static_cast<int>(rng() % static_cast<std::uint64_t>(max_size + 1));
  for (int i = 0; i < size; ++i) out.set(ids[rng() % ids.size()]);
  return out;
}

inline std::vector<char> random_s_mask(std::mt19937_64& rng, const Digraph& g, double p) {
  std::vector<char> mask(static_cast<std::size_t>(g.arc_count()));
  for (auto& f : mask) f = (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) ? 1 : 0;
  return mask;
}

// independent reachability: repeated scans over the arc list
inline Bitset closure_reach(const Digraph& g, const Bitset& from, const Bitset& removed) {
  Bitset seen = from & g.alive();
  seen -= removed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Arc& a : g.arcs()) {
      if (!g.is_alive(a.tail) || !g.is_alive(a.head)) continue;
      if (removed.test(a.tail) || removed.test(a.head)) continue;
      if (seen.test(a.tail) && !seen.test(a.head)) {
        seen.set(a.head);
        grew = true;
      }
    }
  }
  return seen;
}

// brute-force disjoint-compression answer by subset enumeration
inline bool compression_brute_yes(const CompressionInstance& inst) {
  std::vector<int> pool =
      (inst.graph.alive() - inst.graph.undeletable() - inst.old_solution).to_vector();
  int limit = std::min<int>(inst.budget, static_cast<int>(pool.size()));
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from, int remaining) -> bool {
    Bitset x = inst.graph.empty_set();
    for (int v : pick) x.set(v);
    if (verify_solution(inst, x)) return true;
    if (remaining == 0) return false;
    for (std::size_t i = from; i < pool.size(); ++i) {
      pick.push_back(pool[i]);
      if (self(self, i + 1, remaining - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0, limit);
}

}  // namespace sdfvs::testing
