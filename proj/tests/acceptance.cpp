// Acceptance suite: runs each criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "sdfvs/instance_io.hpp"
#include "sdfvs/oracle.hpp"
#include "sdfvs/sampling.hpp"
#include "sdfvs/solver.hpp"
#include "sdfvs/torso.hpp"

using namespace sdfvs;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

struct Criterion {
  int id;
  Clock::time_point start = Clock::now();
  explicit Criterion(int n) : id(n) {}
  void report(bool pass, const std::string& detail) {
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("criterion %2d: %s  [%.1fs] %s\n", id, pass ? "PASS" : "FAIL", secs,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
};

Digraph random_digraph(std::mt19937_64& rng, int n, int max_m) {
  int m = max_m > 0 ? static_cast<int>(rng() % static_cast<std::uint64_t>(max_m + 1)) : 0;
  std::vector<Arc> arcs;
  for (int i = 0; i < m; ++i)
    arcs.push_back({static_cast<int>(rng() % static_cast<std::uint64_t>(n)),
                    static_cast<int>(rng() % static_cast<std::uint64_t>(n))});
  return Digraph::build(n, arcs, Bitset(static_cast<std::size_t>(n)));
}

EdgeInstance random_small_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 1000003ULL + 17);
  int n = 3 + static_cast<int>(rng() % 7);  // 3..9
  long long max_m = std::min<long long>(20, static_cast<long long>(n) * (n - 1));
  long long m = static_cast<long long>(rng() % static_cast<std::uint64_t>(max_m + 1));
  std::set<std::pair<int, int>> used;
  std::vector<Arc> arcs;
  while (static_cast<long long>(arcs.size()) < m) {
    int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (u == v || !used.insert({u, v}).second) continue;
    arcs.push_back({u, v});
  }
  EdgeInstance inst;
  inst.graph = Digraph::build(n, arcs, Bitset(static_cast<std::size_t>(n)));
  inst.s_mask.assign(arcs.size(), 0);
  int s_budget = std::min<int>(6, static_cast<int>(arcs.size()));
  int s_count =
      s_budget > 0 ? static_cast<int>(rng() % static_cast<std::uint64_t>(s_budget + 1)) : 0;
  for (int i = 0; i < s_count; ++i) inst.s_mask[rng() % inst.s_mask.size()] = 1;
  inst.budget = static_cast<int>(rng() % 4);  // 0..3
  return inst;
}

SolverConfig default_config(int n, std::uint64_t seed) {
  SolverConfig cfg;
  cfg.sampling.mode = n <= 16 ? SamplingMode::exhaustive_p : SamplingMode::monte_carlo;
  cfg.sampling.seed = seed;
  cfg.sampling.threads = 2;
  return cfg;
}

bool verified_yes(const EdgeInstance& inst, const SolveResult& r) {
  if (!r.solution) return false;
  Bitset x = inst.graph.empty_set();
  for (VertexId v : r.solution->deleted) x.set(v);
  return r.solution->certified && verify_solution(inst, x);
}

ParsedInstance planted(int n, long long m, int k, double s_fraction, std::uint64_t seed) {
  GenConfig cfg;
  cfg.mode = GenConfig::Mode::planted;
  cfg.n = n;
  cfg.m = m;
  cfg.k = k;
  cfg.s_fraction = s_fraction;
  cfg.seed = seed;
  return generate_instance(cfg);
}

// ---------------------------------------------------------------------------

void criterion_1() {
  Criterion c(1);
  int mismatches = 0, bad_yes = 0, yes_count = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    EdgeInstance inst = random_small_instance(seed);
    SolverConfig cfg;
    cfg.sampling.mode = SamplingMode::exhaustive_p;
    cfg.sampling.seed = seed;
    SolveResult got = solve(inst, cfg);
    bool expect = brute_force_solve(inst).has_value();
    if (got.solution.has_value() != expect) ++mismatches;
    if (got.solution) {
      ++yes_count;
      if (!verified_yes(inst, got)) ++bad_yes;
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - c.start).count();
  c.report(mismatches == 0 && bad_yes == 0 && secs <= 900.0,
           "500 instances, " + std::to_string(yes_count) + " YES, " +
               std::to_string(mismatches) + " oracle mismatches, " + std::to_string(bad_yes) +
               " unverified YES (runtime target 900s)");
}

void criterion_2() {
  Criterion c(2);
  // every mode over an oracle-eligible corpus: YES must verify and must
  // never contradict the oracle
  int violations = 0, runs = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    EdgeInstance inst = random_small_instance(seed + 9000);
    bool oracle_yes = brute_force_solve(inst).has_value();
    for (int mode = 0; mode < 3; ++mode) {
      SolverConfig cfg;
      cfg.sampling.seed = seed;
      if (mode == 0) {
        cfg.sampling.mode = SamplingMode::monte_carlo;
        cfg.sampling.trials = 64;
      } else if (mode == 1) {
        cfg.sampling.mode = SamplingMode::exhaustive_p;
      } else {
        if (inst.budget > 1) continue;  // deterministic mode is gated to k <= 1
        cfg.sampling.mode = SamplingMode::deterministic;
      }
      SolveResult got = solve(inst, cfg);
      ++runs;
      if (got.solution && (!verified_yes(inst, got) || !oracle_yes)) ++violations;
    }
  }
  c.report(violations == 0,
           std::to_string(runs) + " runs across mc/exhaustive-p/det, " +
               std::to_string(violations) + " soundness violations");
}

void criterion_3() {
  Criterion c(3);
  int yes_default = 0, yes_boosted = 0;
  for (int i = 0; i < 100; ++i) {
    int k = 1 + i % 3;
    ParsedInstance inst = planted(30, 90, k, 0.3, 4000 + static_cast<std::uint64_t>(i));
    SolverConfig cfg = default_config(30, 100 + static_cast<std::uint64_t>(i));
    SolveResult got = solve(inst.edge, cfg);
    if (verified_yes(inst.edge, got)) ++yes_default;

    cfg.sampling.trial_factor = 16;
    cfg.sampling.seed = 7700 + static_cast<std::uint64_t>(i);
    SolveResult boosted = solve(inst.edge, cfg);
    if (verified_yes(inst.edge, boosted)) ++yes_boosted;
  }
  c.report(yes_default >= 95 && yes_boosted == 100,
           "default mode " + std::to_string(yes_default) + "/100 (need >= 95), 16x trials " +
               std::to_string(yes_boosted) + "/100 (need 100)");
}

void criterion_4() {
  Criterion c(4);
  std::mt19937_64 rng(424242);
  long long checked = 0;
  int mismatches = 0, bound_violations = 0;
  for (int it = 0; it < 200; ++it) {
    int n = 3 + static_cast<int>(rng() % 5);  // 3..7
    Digraph g = random_digraph(rng, n, 3 * n);
    for (int xm = 1; xm < (1 << n); ++xm) {
      for (int ym = 1; ym < (1 << n); ++ym) {
        if (xm & ym) continue;
        Bitset x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
        for (int b = 0; b < n; ++b) {
          if (xm & (1 << b)) x.set(b);
          if (ym & (1 << b)) y.set(b);
        }
        for (int k = 0; k <= 3; ++k) {
          SeparatorList fast = enumerate_important_separators(g, x, y, k);
          SeparatorList slow = brute_force_important_separators(g, x, y, k);
          std::set<std::vector<int>> a, b;
          for (const Separator& s : fast.items) a.insert(s.vertices.to_vector());
          for (const Separator& s : slow.items) b.insert(s.vertices.to_vector());
          if (fast.inseparable != slow.inseparable || a != b) ++mismatches;
          if (fast.items.size() > (std::size_t{1} << (2 * k))) ++bound_violations;
          ++checked;
        }
      }
    }
  }
  c.report(mismatches == 0 && bound_violations == 0,
           std::to_string(checked) + " (graph,X,Y,k) tuples, " + std::to_string(mismatches) +
               " oracle mismatches, " + std::to_string(bound_violations) + " 4^k violations");
}

void criterion_5() {
  Criterion c(5);
  // the worked r=3, k=4 example: a_i -> every t_j, b_i -> a_i, c_ij -> a_i,a_j
  const int r = 3, k = 4;
  int next = 0;
  std::vector<int> t(k), a(r), b(r);
  for (int& v : t) v = next++;
  for (int& v : a) v = next++;
  for (int& v : b) v = next++;
  std::vector<Arc> arcs;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j) arcs.push_back({a[i], t[j]});
  for (int i = 0; i < r; ++i) arcs.push_back({b[i], a[i]});
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      arcs.push_back({next, a[i]});
      arcs.push_back({next, a[j]});
      ++next;
    }
  Digraph g = Digraph::build(next, arcs, Bitset(static_cast<std::size_t>(next)));
  Bitset terminals(static_cast<std::size_t>(next));
  for (int v : t) terminals.set(v);

  std::vector<Separator> ik = enumerate_Ik(g, terminals, k);
  std::set<std::vector<int>> sets;
  for (const Separator& s : ik) sets.insert(s.vertices.to_vector());

  bool ok = true;
  for (int i = 0; i < r && ok; ++i) ok = sets.count({a[i]}) == 1;
  for (int i = 0; i < r && ok; ++i)
    for (int j = i + 1; j < r && ok; ++j) {
      std::vector<int> pair{a[i], a[j]};
      std::sort(pair.begin(), pair.end());
      ok = sets.count(pair) == 1;
    }

  int covering_b1 = 0;
  bool only_a1 = true;
  for (const Separator& s : ik) {
    if (exact_reverse_shadow(g, terminals, s.vertices).test(b[0])) {
      ++covering_b1;
      if (!(s.vertices == g.singleton(a[0]))) only_a1 = false;
    }
  }
  ok = ok && covering_b1 == 1 && only_a1;
  c.report(ok, "|I_k|=" + std::to_string(ik.size()) + ", b_1 in " +
                   std::to_string(covering_b1) + " exact reverse shadows (need exactly {a_1})");
}

void criterion_6() {
  Criterion c(6);
  std::mt19937_64 rng(606060);
  int sep_checked = 0, sep_bad = 0;
  while (sep_checked < 1000) {
    int n = 3 + static_cast<int>(rng() % 6);
    Digraph g = random_digraph(rng, n, 3 * n);
    Bitset cset(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      if (rng() % 2) cset.set(v);
    if (cset.count() < 2) continue;
    std::vector<char> no_s(static_cast<std::size_t>(g.arc_count()), 0);
    TorsoResult t = torso(g, cset, no_s);
    std::vector<int> inside = cset.to_vector();
    Bitset w(static_cast<std::size_t>(n));
    for (int v : inside)
      if (rng() % 3 == 0) w.set(v);
    std::vector<int> rest;
    for (int v : inside)
      if (!w.test(v)) rest.push_back(v);
    if (rest.size() < 2) continue;
    int av = rest[rng() % rest.size()];
    int bv = rest[rng() % rest.size()];
    bool in_g = reach_forward(g, g.singleton(av), w).test(bv);
    bool in_t = reach_forward(t.graph, t.graph.singleton(av), w).test(bv);
    if (in_g != in_t) ++sep_bad;
    ++sep_checked;
  }

  int walk_checked = 0, walk_bad = 0;
  while (walk_checked < 1000) {
    int n = 3 + static_cast<int>(rng() % 6);
    Digraph g = random_digraph(rng, n, 3 * n);
    std::vector<char> mask(static_cast<std::size_t>(g.arc_count()));
    for (auto& f : mask) f = rng() % 3 == 0 ? 1 : 0;
    Bitset cset(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      if (rng() % 2) cset.set(v);
    std::vector<int> inside = cset.to_vector();
    if (inside.empty()) continue;
    int v = inside[rng() % inside.size()];
    Bitset w(static_cast<std::size_t>(n));
    for (int u : inside)
      if (u != v && rng() % 3 == 0) w.set(u);
    TorsoResult t = torso(g, cset, mask);
    DerivedGraph gd = induce(g, g.alive() - w);
    bool in_g = has_s_closed_walk_through(gd.graph, remap_s_mask(mask, gd.arc_origin), v);
    DerivedGraph td = induce(t.graph, t.graph.alive() - w);
    bool in_t = has_s_closed_walk_through(td.graph, remap_s_mask(t.s_mask, td.arc_origin), v);
    if (in_g != in_t) ++walk_bad;
    ++walk_checked;
  }
  c.report(sep_bad == 0 && walk_bad == 0,
           "separation " + std::to_string(sep_bad) + "/1000 violations, walks " +
               std::to_string(walk_bad) + "/1000 violations");
}

void criterion_7() {
  Criterion c(7);
  std::mt19937_64 rng(707070);
  int violations = 0;
  long long checked = 0;
  for (int it = 0; it < 200; ++it) {
    int n = 3 + static_cast<int>(rng() % 5);
    Digraph g = random_digraph(rng, n, 3 * n);
    Bitset t(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      if (rng() % 3 == 0) t.set(v);
    if (t.none()) t.set(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
    for (int k = 0; k <= 3; ++k) {
      std::vector<int> per_vertex(static_cast<std::size_t>(n), 0);
      for (const Separator& s : enumerate_Ik(g, t, k))
        exact_reverse_shadow(g, t, s.vertices).for_each([&](int z) {
          ++per_vertex[static_cast<std::size_t>(z)];
        });
      for (int z = 0; z < n; ++z)
        if (per_vertex[static_cast<std::size_t>(z)] > (1 << (2 * k))) ++violations;
      ++checked;
    }
  }
  c.report(violations == 0, std::to_string(checked) + " (graph,T,k) tuples, " +
                                std::to_string(violations) + " per-vertex 4^k violations");
}

void criterion_8() {
  Criterion c(8);
  std::mt19937_64 rng(808080);
  int not_subset = 0, too_big = 0;
  for (int it = 0; it < 200; ++it) {
    int n = 3 + static_cast<int>(rng() % 4);  // 3..6
    Digraph g = random_digraph(rng, n, 3 * n);
    std::vector<char> mask(static_cast<std::size_t>(g.arc_count()));
    for (auto& f : mask) f = rng() % 3 == 0 ? 1 : 0;
    Bitset t0(static_cast<std::size_t>(n));
    t0.set(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
    if (rng() % 2) t0.set(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
    for (int k = 1; k <= 3; ++k) {
      Bitset brute = brute_force_critical(g, mask, t0, k);
      Bitset fast = critical_vertex_superset(g, mask, t0, k);
      if (!brute.subset_of(fast)) ++not_subset;
      if (fast.count() > 2 * k * (1LL << (4 * k))) ++too_big;
    }
  }
  c.report(not_subset == 0 && too_big == 0,
           "600 (graph,S,T0,k) tuples, " + std::to_string(not_subset) + " superset violations, " +
               std::to_string(too_big) + " size-bound violations");
}

void criterion_9() {
  Criterion c(9);
  bool ok = true;
  std::string detail;
  for (int n = 3; n <= 5; ++n) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) arcs.push_back({u, v});
    Digraph g = Digraph::build(n, arcs, Bitset(static_cast<std::size_t>(n)));
    EdgeInstance no_inst{g, std::vector<char>(arcs.size(), 1), n - 2};
    EdgeInstance yes_inst{g, std::vector<char>(arcs.size(), 1), n - 1};

    SolveResult no_res = solve(no_inst, default_config(n, 9));
    SolveResult yes_res = solve(yes_inst, default_config(n, 9));
    bool this_ok = !no_res.solution.has_value() && verified_yes(yes_inst, yes_res) &&
                   !brute_force_solve(no_inst).has_value() &&
                   brute_force_solve(yes_inst).has_value();
    if (!this_ok) ok = false;
    detail += "K" + std::to_string(n) + (this_ok ? " ok " : " BAD ");
  }
  c.report(ok, detail);
}

void criterion_10() {
  Criterion c(10);
  std::vector<double> times;
  int yes = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    ParsedInstance inst = planted(50, 150, 3, 0.25, seed);
    SolverConfig cfg = default_config(50, seed);
    auto t0 = Clock::now();
    SolveResult r = solve(inst.edge, cfg);
    times.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
    if (verified_yes(inst.edge, r)) ++yes;
  }
  std::sort(times.begin(), times.end());
  double median = (times[9] + times[10]) / 2;
  c.report(yes == 20 && median < 60.0,
           std::to_string(yes) + "/20 certified YES, median " + std::to_string(median) +
               "s (need < 60s), max " + std::to_string(times.back()) + "s");
}

}  // namespace

int main(int argc, char** argv) {
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  auto want = [&](int id) { return only == 0 || only == id; };
  if (want(1)) criterion_1();
  if (want(2)) criterion_2();
  if (want(3)) criterion_3();
  if (want(4)) criterion_4();
  if (want(5)) criterion_5();
  if (want(6)) criterion_6();
  if (want(7)) criterion_7();
  if (want(8)) criterion_8();
  if (want(9)) criterion_9();
  if (want(10)) criterion_10();
  return failures;
}
