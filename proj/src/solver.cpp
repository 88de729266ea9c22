#include "sdfvs/solver.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>
#include <unordered_set>

namespace sdfvs {

// ---------------------------------------------------------------------------
// instance plumbing

EndpointSets endpoint_sets(const Digraph& g, const std::vector<char>& s_mask) {
  EndpointSets e{g.empty_set(), g.empty_set()};
  for (int i = 0; i < g.arc_count(); ++i) {
    if (!s_mask[i]) continue;
    e.s_minus.set(g.arc(i).tail);
    e.s_plus.set(g.arc(i).head);
  }
  return e;
}

bool has_s_closed_walk(const Digraph& g, const std::vector<char>& s_mask) {
  SccDecomposition d = scc(g);
  for (int i = 0; i < g.arc_count(); ++i)
    if (s_mask[i] && d.same_component(g.arc(i).tail, g.arc(i).head)) return true;
  return false;
}

bool has_s_closed_walk_through(const Digraph& g, const std::vector<char>& s_mask, VertexId v) {
  if (!g.is_alive(v)) return false;
  SccDecomposition d = scc(g);
  for (int i = 0; i < g.arc_count(); ++i)
    if (s_mask[i] && d.same_component(g.arc(i).tail, g.arc(i).head) &&
        d.same_component(g.arc(i).tail, v))
      return true;
  return false;
}

std::vector<char> remap_s_mask(const std::vector<char>& s_mask,
                               const std::vector<int>& arc_origin) {
  std::vector<char> out(arc_origin.size());
  for (std::size_t i = 0; i < arc_origin.size(); ++i)
    out[i] = s_mask[static_cast<std::size_t>(arc_origin[i])];
  return out;
}

namespace {

bool clean_after_delete(const Digraph& g, const std::vector<char>& s_mask, const Bitset& removed) {
  DerivedGraph d = induce(g, g.alive() - removed);
  return !has_s_closed_walk(d.graph, remap_s_mask(s_mask, d.arc_origin));
}

}  // namespace

bool verify_solution(const EdgeInstance& inst, const Bitset& deleted) {
  if (deleted.count() > inst.budget) return false;
  if (!deleted.subset_of(inst.graph.alive())) return false;
  if (deleted.intersects(inst.graph.undeletable())) return false;
  return clean_after_delete(inst.graph, inst.s_mask, deleted);
}

bool verify_solution(const CompressionInstance& inst, const Bitset& deleted) {
  if (deleted.count() > inst.budget) return false;
  if (!deleted.subset_of(inst.graph.alive())) return false;
  if (deleted.intersects(inst.graph.undeletable())) return false;
  if (deleted.intersects(inst.old_solution)) return false;
  return clean_after_delete(inst.graph, inst.s_mask, deleted);
}

CompressionInstance make_compression_instance(Digraph graph, std::vector<char> s_mask,
                                              Bitset old_solution, int budget) {
  if (budget < 0) throw ContractViolation("compression instance: negative budget");
  if (!old_solution.subset_of(graph.alive()))
    throw ContractViolation("compression instance: T not alive");
  if (!clean_after_delete(graph, s_mask, old_solution))
    throw ContractViolation("compression instance: G \\ T still has an S-closed-walk");
  return {std::move(graph), std::move(s_mask), std::move(old_solution), budget};
}

// ---------------------------------------------------------------------------
// reductions between the vertex and edge forms

EdgeInstance vertex_to_edge(const VertexInstance& inst) {
  EdgeInstance out;
  out.graph = inst.graph;
  out.budget = inst.budget;
  out.s_mask.resize(static_cast<std::size_t>(inst.graph.arc_count()));
  for (int i = 0; i < inst.graph.arc_count(); ++i) {
    const Arc& a = inst.graph.arc(i);
    out.s_mask[static_cast<std::size_t>(i)] =
        inst.s_vertices.test(a.tail) || inst.s_vertices.test(a.head);
  }
  return out;
}

VertexInstance edge_to_vertex(const EdgeInstance& inst, bool subdivide_all) {
  const Digraph& g = inst.graph;
  int extra = 0;
  for (int i = 0; i < g.arc_count(); ++i)
    if (subdivide_all || inst.s_mask[static_cast<std::size_t>(i)]) ++extra;

  int n2 = g.slot_count() + extra;
  Bitset alive(static_cast<std::size_t>(n2));
  Bitset undeletable(static_cast<std::size_t>(n2));
  Bitset s_vertices(static_cast<std::size_t>(n2));
  g.alive().for_each([&](int v) { alive.set(v); });
  g.undeletable().for_each([&](int v) { undeletable.set(v); });

  std::vector<Arc> arcs;
  int next = g.slot_count();
  for (int i = 0; i < g.arc_count(); ++i) {
    const Arc& a = g.arc(i);
    bool in_s = inst.s_mask[static_cast<std::size_t>(i)];
    if (subdivide_all || in_s) {
      int x = next++;
      alive.set(x);
      if (in_s) s_vertices.set(x);
      arcs.push_back({a.tail, x});
      arcs.push_back({x, a.head});
    } else {
      arcs.push_back(a);
    }
  }
  VertexInstance out;
  out.graph = assemble_graph(n2, std::move(alive), std::move(undeletable), std::move(arcs));
  out.s_vertices = std::move(s_vertices);
  out.budget = inst.budget;
  return out;
}

// ---------------------------------------------------------------------------
// preprocessing

CompressionInstance preprocess(const CompressionInstance& inst) {
  Digraph g = inst.graph;
  std::vector<char> mask = inst.s_mask;
  Bitset t = inst.old_solution;

  while (true) {
    Bitset s_minus = endpoint_sets(g, mask).s_minus;
    Bitset reaches_s = s_minus.any() ? reach_backward(g, s_minus, g.empty_set()) : g.empty_set();
    Bitset stuck = t - reaches_s;
    if (stuck.none()) break;
    t -= stuck;
    Bitset removable = stuck - g.undeletable();
    if (removable.any()) {
      DerivedGraph d = delete_vertices(g, removable);
      mask = remap_s_mask(mask, d.arc_origin);
      g = std::move(d.graph);
    }
  }
  return {std::move(g), std::move(mask), std::move(t), inst.budget};
}

// ---------------------------------------------------------------------------
// critical vertices

AuxCriticalGraph build_aux_critical_graph(const Digraph& g, const std::vector<char>& s_mask,
                                          const Bitset& t0) {
  const int n = g.slot_count();
  const int source = 2 * n, sink = 2 * n + 1;
  Bitset alive(static_cast<std::size_t>(2 * n + 2));
  g.alive().for_each([&](int v) {
    alive.set(2 * v);
    alive.set(2 * v + 1);
  });
  alive.set(source);
  alive.set(sink);

  std::vector<Arc> arcs;
  for (int i = 0; i < g.arc_count(); ++i) {
    const Arc& a = g.arc(i);
    if (s_mask[static_cast<std::size_t>(i)])
      arcs.push_back({2 * a.tail + 1, 2 * a.head});
    else
      arcs.push_back({2 * a.tail + 1, 2 * a.head + 1});
  }
  g.alive().for_each([&](int v) {
    arcs.push_back({2 * v, 2 * v + 1});
    arcs.push_back({2 * v, sink});
  });
  t0.for_each([&](int v) { arcs.push_back({source, 2 * v + 1}); });

  AuxCriticalGraph aux;
  aux.graph = assemble_graph(2 * n + 2, std::move(alive), Bitset(static_cast<std::size_t>(2 * n + 2)),
                             std::move(arcs));
  aux.source = source;
  aux.sink = sink;
  return aux;
}

Bitset critical_vertex_superset(const Digraph& g, const std::vector<char>& s_mask,
                                const Bitset& t0, int k) {
  if (t0.none()) throw ContractViolation("critical_vertex_superset: T0 must be nonempty");
  AuxCriticalGraph aux = build_aux_critical_graph(g, s_mask, t0);
  SeparatorList seps = enumerate_important_separators(
      aux.graph, aux.graph.singleton(aux.source), aux.graph.singleton(aux.sink), 2 * k);
  Bitset f = g.empty_set();
  if (seps.inseparable) return f;  // cannot happen: every s-t path has an in-copy
  for (const Separator& s : seps.items)
    s.vertices.for_each([&](int node) {
      if (node % 2 == 0 && node / 2 < g.slot_count()) f.set(node / 2);
    });
  return f;
}

// ---------------------------------------------------------------------------
// branching

AugmentedGraph build_augmented_graph(const Digraph& g, const std::vector<char>& s_mask) {
  const int n = g.slot_count();
  Bitset alive(static_cast<std::size_t>(n + 1));
  Bitset undeletable(static_cast<std::size_t>(n + 1));
  g.alive().for_each([&](int v) { alive.set(v); });
  g.undeletable().for_each([&](int v) { undeletable.set(v); });
  alive.set(n);
  undeletable.set(n);

  std::vector<Arc> arcs(g.arcs());
  endpoint_sets(g, s_mask).s_minus.for_each([&](int u) { arcs.push_back({u, n}); });

  AugmentedGraph out;
  out.graph = assemble_graph(n + 1, std::move(alive), std::move(undeletable), std::move(arcs));
  out.sink = n;
  return out;
}

std::vector<BranchChild> branch(const CompressionInstance& inst, const Bitset& f) {
  const Digraph& g = inst.graph;
  const Bitset& t = inst.old_solution;
  const int k = inst.budget;
  std::vector<BranchChild> children;

  // rule 1: put one vertex of F \ T into the solution
  (f - t - g.undeletable()).for_each([&](int v) {
    if (k < 1) return;
    DerivedGraph d = delete_vertices(g, g.singleton(v));
    children.push_back(
        {{std::move(d.graph), remap_s_mask(inst.s_mask, d.arc_origin), t, k - 1}, {v}});
  });

  // rule 2: delete an important T0-({t} u (T\T0)) separator of G+
  AugmentedGraph aug = build_augmented_graph(g, inst.s_mask);
  std::vector<int> t_ids = t.to_vector();
  if (t_ids.size() > 20) throw ContractViolation("branch: T too large for subset enumeration");
  std::vector<Bitset> cuts;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << t_ids.size()); ++sub) {
    Bitset t0(static_cast<std::size_t>(aug.graph.slot_count()));
    Bitset target(static_cast<std::size_t>(aug.graph.slot_count()));
    target.set(aug.sink);
    for (std::size_t b = 0; b < t_ids.size(); ++b) {
      if (sub & (std::uint64_t{1} << b))
        t0.set(t_ids[b]);
      else
        target.set(t_ids[b]);
    }
    SeparatorList seps = enumerate_important_separators(aug.graph, t0, target, k);
    if (seps.inseparable) continue;
    for (Separator& s : seps.items) {
      if (s.vertices.none()) continue;  // ruled out by preprocessing
      Bitset cut = g.empty_set();
      s.vertices.for_each([&](int v) { cut.set(v); });
      if (seen.insert(cut).second) cuts.push_back(std::move(cut));
    }
  }
  std::sort(cuts.begin(), cuts.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.to_vector() < b.to_vector();
  });
  for (const Bitset& cut : cuts) {
    DerivedGraph d = delete_vertices(g, cut);
    children.push_back({{std::move(d.graph), remap_s_mask(inst.s_mask, d.arc_origin), t,
                         k - cut.count()},
                        cut.to_vector()});
  }
  return children;
}

// ---------------------------------------------------------------------------
// search

namespace {

using Clock = std::chrono::steady_clock;

std::string instance_key(const CompressionInstance& inst) {
  // answers depend only on connectivity, the S arc-set, T and k; arc
  // multiplicities are collapsed
  std::vector<std::uint64_t> items;
  items.reserve(inst.graph.arcs().size());
  for (int i = 0; i < inst.graph.arc_count(); ++i) {
    const Arc& a = inst.graph.arc(i);
    items.push_back((static_cast<std::uint64_t>(a.tail) << 33) |
                    (static_cast<std::uint64_t>(a.head) << 1) |
                    (inst.s_mask[static_cast<std::size_t>(i)] ? 1 : 0));
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());

  std::string key;
  key.reserve(items.size() * 8 + 64);
  auto put = [&key](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
  };
  auto put_set = [&](const Bitset& s) {  // length-prefixed section
    put(static_cast<std::uint64_t>(s.count()));
    s.for_each([&](int v) { put(static_cast<std::uint64_t>(v)); });
  };
  put(static_cast<std::uint64_t>(inst.budget));
  put_set(inst.graph.alive());
  put_set(inst.graph.undeletable());
  put_set(inst.old_solution);
  put(items.size());
  for (std::uint64_t x : items) put(x);
  return key;
}

struct Engine {
  SolverConfig cfg;
  SolveStats* stats;
  Clock::time_point deadline;
  bool has_deadline = false;
  std::uint64_t covering_calls = 0;
  std::unordered_map<std::string, std::optional<std::vector<VertexId>>> memo;

  Engine(const SolverConfig& config, SolveStats* st) : cfg(config), stats(st) {
    if (cfg.timeout_seconds >= 0) {
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(cfg.timeout_seconds));
      has_deadline = true;
    }
  }

  void check_limits() const {
    if (cfg.max_nodes >= 0 && stats->nodes > cfg.max_nodes)
      throw LimitExceeded("search node limit exceeded");
    if (has_deadline && Clock::now() > deadline) throw LimitExceeded("timeout exceeded");
  }

  // greedy vertex-disjoint S-cycle packing; > budget cycles certify NO
  bool packing_exceeds_budget(const CompressionInstance& inst) {
    Bitset used = inst.graph.empty_set();
    int found = 0;
    while (found <= inst.budget) {
      DerivedGraph d = induce(inst.graph, inst.graph.alive() - used);
      std::vector<char> mask = remap_s_mask(inst.s_mask, d.arc_origin);
      SccDecomposition comp = scc(d.graph);
      int arc_idx = -1;
      for (int i = 0; i < d.graph.arc_count(); ++i) {
        if (mask[static_cast<std::size_t>(i)] &&
            comp.same_component(d.graph.arc(i).tail, d.graph.arc(i).head)) {
          arc_idx = i;
          break;
        }
      }
      if (arc_idx < 0) return false;
      ++found;
      if (found > inst.budget) return true;
      // remove the cycle: the arc plus a head->tail path inside the component
      const Arc a = d.graph.arc(arc_idx);
      used.set(a.tail);
      used.set(a.head);
      // BFS from head to tail
      std::vector<int> parent(static_cast<std::size_t>(d.graph.slot_count()), -1);
      std::vector<int> queue{a.head};
      parent[static_cast<std::size_t>(a.head)] = a.head;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        if (x == a.tail) break;
        for (auto [w, ai] : d.graph.out(x)) {
          (void)ai;
          if (!d.graph.is_alive(w) || parent[static_cast<std::size_t>(w)] != -1) continue;
          parent[static_cast<std::size_t>(w)] = x;
          queue.push_back(w);
        }
      }
      for (int x = a.tail; x != a.head; x = parent[static_cast<std::size_t>(x)]) used.set(x);
    }
    return false;
  }

  // an S-closed-walk confined to T and undeletable vertices can never be hit
  bool untouchable_walk(const CompressionInstance& inst) {
    Bitset keep = (inst.old_solution | inst.graph.undeletable()) & inst.graph.alive();
    DerivedGraph d = induce(inst.graph, keep);
    return has_s_closed_walk(d.graph, remap_s_mask(inst.s_mask, d.arc_origin));
  }

  // Undeletable vertices outside T can never be deleted, and the torso keeps
  // exactly the S-closed-walks that touch the rest of the graph, so they can
  // be contracted away. Shadows never contain T-vertices, so afterwards every
  // shadow vertex is coverable by the sampled sets. Requires the untouchable
  // check to have run (no S-closed-walk inside the dropped region).
  static CompressionInstance eliminate_undeletable_outside_t(const CompressionInstance& inst) {
    Bitset drop = (inst.graph.undeletable() - inst.old_solution) & inst.graph.alive();
    if (drop.none()) return inst;
    TorsoResult t = torso(inst.graph, inst.graph.alive() - drop, inst.s_mask);
    return {std::move(t.graph), std::move(t.s_mask), inst.old_solution, inst.budget};
  }

  SamplingConfig node_sampling_config() {
    SamplingConfig sc = cfg.sampling;
    sc.seed = derive_seed(cfg.sampling.seed, covering_calls++);
    return sc;
  }

  std::optional<std::vector<VertexId>> disjoint(const CompressionInstance& inst) {
    ++stats->nodes;
    check_limits();

    if (!has_s_closed_walk(inst.graph, inst.s_mask)) return std::vector<VertexId>{};
    if (inst.budget <= 0) return std::nullopt;

    std::string key = instance_key(inst);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    if (untouchable_walk(inst) || packing_exceeds_budget(inst)) {
      memo.emplace(std::move(key), std::nullopt);
      return std::nullopt;
    }

    CompressionInstance pre = preprocess(eliminate_undeletable_outside_t(inst));
    if (pre.old_solution.none()) {
      // all of T was irrelevant, so the instance is already clean
      std::optional<std::vector<VertexId>> res;
      if (!has_s_closed_walk(pre.graph, pre.s_mask)) res = std::vector<VertexId>{};
      memo.emplace(std::move(key), res);
      return res;
    }

    std::optional<std::vector<VertexId>> answer;
    CoveringStream stream(pre.graph, pre.old_solution, pre.budget, node_sampling_config());
    std::unordered_set<Bitset, BitsetHash> seen_z;
    std::unordered_set<std::string> seen_reduced;
    while (auto z = stream.next()) {
      if (!seen_z.insert(*z).second) continue;
      CompressionInstance reduced = preprocess(reduce_instance(pre, *z));
      if (!seen_reduced.insert(instance_key(reduced)).second) continue;

      if (reduced.old_solution.none()) {
        if (!has_s_closed_walk(reduced.graph, reduced.s_mask)) {
          answer = std::vector<VertexId>{};
          break;
        }
        continue;
      }

      Bitset f = reduced.graph.empty_set();
      std::vector<int> t_ids = reduced.old_solution.to_vector();
      if (t_ids.size() > 20)
        throw ContractViolation("disjoint compression: T too large for subset enumeration");
      for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << t_ids.size()); ++sub) {
        Bitset t0 = reduced.graph.empty_set();
        for (std::size_t b = 0; b < t_ids.size(); ++b)
          if (sub & (std::uint64_t{1} << b)) t0.set(t_ids[b]);
        f |= critical_vertex_superset(reduced.graph, reduced.s_mask, t0, reduced.budget);
      }

      for (BranchChild& child : branch(reduced, f)) {
        auto sub = disjoint(child.instance);
        if (!sub) continue;
        std::vector<VertexId> lifted = std::move(*sub);
        lifted.insert(lifted.end(), child.deleted.begin(), child.deleted.end());
        std::sort(lifted.begin(), lifted.end());
        Bitset lifted_set = inst.graph.empty_set();
        for (VertexId v : lifted) lifted_set.set(v);
        if (!verify_solution(inst, lifted_set))
          throw InternalError("lifted solution failed verification");
        answer = std::move(lifted);
        break;
      }
      if (answer) break;
    }
    stats->covering_trials += stream.consumed();
    memo.emplace(std::move(key), answer);
    return answer;
  }

  std::optional<std::vector<VertexId>> compression(const CompressionInstance& inst) {
    std::vector<int> guessable = (inst.old_solution - inst.graph.undeletable()).to_vector();
    if (guessable.size() > 20)
      throw ContractViolation("compression: T too large for subset enumeration");
    // larger intersections first, lexicographic within one size: this tries
    // the previous stage's solution before any real search happens
    std::vector<std::vector<int>> guesses;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << guessable.size()); ++sub) {
      std::vector<int> x;
      for (std::size_t b = 0; b < guessable.size(); ++b)
        if (sub & (std::uint64_t{1} << b)) x.push_back(guessable[b]);
      guesses.push_back(std::move(x));
    }
    std::stable_sort(guesses.begin(), guesses.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                       if (a.size() != b.size()) return a.size() > b.size();
                       return a < b;
                     });

    for (const std::vector<int>& x : guesses) {
      if (static_cast<int>(x.size()) > inst.budget) continue;
      Bitset xs = inst.graph.empty_set();
      for (int v : x) xs.set(v);
      Bitset rest_t = inst.old_solution - xs;
      if (rest_t.none()) {
        // X = T: G \ T is clean by the instance invariant
        return x;
      }
      DerivedGraph d = delete_vertices(inst.graph, xs);
      CompressionInstance child{std::move(d.graph), remap_s_mask(inst.s_mask, d.arc_origin),
                                std::move(rest_t), inst.budget - static_cast<int>(x.size())};
      auto sub = disjoint(child);
      if (sub) {
        std::vector<VertexId> merged = std::move(*sub);
        merged.insert(merged.end(), x.begin(), x.end());
        std::sort(merged.begin(), merged.end());
        return merged;
      }
    }
    return std::nullopt;
  }
};

std::optional<Solution> certify(bool ok, std::optional<std::vector<VertexId>> raw) {
  if (!raw) return std::nullopt;
  if (!ok) throw InternalError("solution failed final verification");
  return Solution{std::move(*raw), true};
}

Bitset to_bitset(const Digraph& g, const std::vector<VertexId>& ids) {
  Bitset b = g.empty_set();
  for (VertexId v : ids) b.set(v);
  return b;
}

}  // namespace

std::optional<Solution> solve_disjoint_compression(const CompressionInstance& inst,
                                                   const SolverConfig& cfg, SolveStats& stats) {
  Engine engine(cfg, &stats);
  auto raw = engine.disjoint(inst);
  bool ok = !raw || verify_solution(inst, to_bitset(inst.graph, *raw));
  return certify(ok, std::move(raw));
}

std::optional<Solution> solve_compression(const CompressionInstance& inst, const SolverConfig& cfg,
                                          SolveStats& stats) {
  Engine engine(cfg, &stats);
  auto raw = engine.compression(inst);
  // the compression problem allows the answer to intersect T, so certify
  // against the plain edge-instance semantics
  EdgeInstance plain{inst.graph, inst.s_mask, inst.budget};
  bool ok = !raw || verify_solution(plain, to_bitset(inst.graph, *raw));
  return certify(ok, std::move(raw));
}

SolveResult solve(const EdgeInstance& inst, const SolverConfig& cfg) {
  SolveResult result;
  result.exact = cfg.sampling.mode != SamplingMode::monte_carlo;

  SolverConfig attempt_cfg = cfg;
  int max_attempts = cfg.sampling.mode == SamplingMode::monte_carlo
                         ? std::max(0, cfg.max_retries) + 1
                         : 1;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    if (attempt > 0) {
      attempt_cfg.sampling.trial_factor =
          std::max<long long>(1, attempt_cfg.sampling.trial_factor) * 2;
      attempt_cfg.sampling.seed = derive_seed(cfg.sampling.seed, 0x52455452ULL + attempt);
      result.stats.retries = attempt;
    }
    Engine engine(attempt_cfg, &result.stats);

    std::vector<int> order = inst.graph.alive().to_vector();
    Bitset prefix = inst.graph.empty_set();
    std::vector<VertexId> current;  // solution for the current prefix
    bool failed = false;
    for (int v : order) {
      prefix.set(v);
      DerivedGraph d = induce(inst.graph, prefix);
      std::vector<char> stage_mask = remap_s_mask(inst.s_mask, d.arc_origin);
      // the previous stage's solution often still works once v joins
      Bitset carried = d.graph.empty_set();
      for (VertexId u : current) carried.set(u);
      if (verify_solution(EdgeInstance{d.graph, stage_mask, inst.budget}, carried)) continue;
      Bitset t = std::move(carried);
      t.set(v);
      CompressionInstance stage = make_compression_instance(
          d.graph, std::move(stage_mask), std::move(t), inst.budget);
      auto next = engine.compression(stage);
      if (!next) {
        failed = true;
        break;
      }
      current = std::move(*next);
    }
    if (!failed) {
      Bitset final_set = inst.graph.empty_set();
      for (VertexId v : current) final_set.set(v);
      if (!verify_solution(inst, final_set))
        throw InternalError("iterative compression produced an invalid solution");
      result.solution = Solution{std::move(current), true};
      return result;
    }
    if (result.exact) break;  // NO is unconditional outside monte-carlo mode
  }
  return result;
}

}  // namespace sdfvs
