#include "sdfvs/sampling.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace sdfvs {

const char* to_string(SamplingMode mode) {
  switch (mode) {
    case SamplingMode::monte_carlo: return "mc";
    case SamplingMode::deterministic: return "det";
    case SamplingMode::exhaustive_p: return "exhaustive-p";
  }
  return "?";
}

long long default_trial_count(int k) {
  long long exponent = 2LL * k * k;  // 4^(k^2) = 2^(2k^2)
  long long base = exponent >= 62 ? (1LL << 62) : (1LL << exponent);
  return base + 64;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// P with each alive vertex kept with probability exactly 4^-k: one raw
// mt19937_64 draw per vertex, selected when the low 2k bits are zero.
Bitset sample_p(const Digraph& g, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t mask = k >= 32 ? ~0ULL : ((std::uint64_t{1} << (2 * k)) - 1);
  Bitset p = g.empty_set();
  for (int v = 0; v < g.slot_count(); ++v) {
    if (!g.is_alive(v)) continue;
    std::uint64_t draw = rng();
    if ((draw & mask) == 0) p.set(v);
  }
  return p;
}

struct SamplingContext {
  std::vector<Bitset> members;  // I_k
  std::vector<Bitset> shadows;  // exact reverse shadows, one per member
};

SamplingContext build_context(const Digraph& g, const Bitset& t, int k) {
  SamplingContext ctx;
  for (Separator& s : enumerate_Ik(g, t, k)) {
    ctx.shadows.push_back(exact_reverse_shadow(g, t, s.vertices));
    ctx.members.push_back(std::move(s.vertices));
  }
  return ctx;
}

Bitset expand(const Digraph& g, const SamplingContext& ctx, const Bitset& p) {
  Bitset z = g.empty_set();
  for (std::size_t i = 0; i < ctx.members.size(); ++i)
    if (ctx.members[i].subset_of(p)) z |= ctx.shadows[i];
  z -= g.undeletable();
  return z;
}

// First-principles expansion used by the reference implementation: walk the
// candidate subsets of P directly and test membership in I_k per candidate.
Bitset expand_reference(const Digraph& g, const Bitset& t, int k, const Bitset& p) {
  std::vector<int> cand = ((p & g.alive()) - t - g.undeletable()).to_vector();
  Bitset z = g.empty_set();

  auto consider = [&](const Bitset& w) {
    Bitset sh = exact_reverse_shadow(g, t, w);
    if (sh.none()) return;
    bool member = false;
    sh.for_each([&](int v) {
      if (!member && is_important(g, g.singleton(v), t, w)) member = true;
    });
    if (member) z |= sh;
  };

  int limit = std::min<int>(k, static_cast<int>(cand.size()));
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
    {
      Bitset w = g.empty_set();
      for (int v : pick) w.set(v);
      consider(w);
    }
    if (remaining == 0) return;
    for (std::size_t i = from; i < cand.size(); ++i) {
      pick.push_back(cand[i]);
      self(self, i + 1, remaining - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, limit);
  z -= g.undeletable();
  return z;
}

Digraph phase2_graph(const Digraph& g, const Bitset& z1) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) arcs.push_back({a.head, a.tail});
  return assemble_graph(g.slot_count(), g.alive(), g.undeletable() | z1, std::move(arcs));
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base + 0x9E3779B97F4A7C15ULL * (index + 1));
}

Bitset random_set(const Digraph& g, const Bitset& t, int k, std::uint64_t seed) {
  if (t.none()) throw ContractViolation("random_set: T must be nonempty");
  if (k < 0) throw ContractViolation("random_set: negative k");
  SamplingContext ctx = build_context(g, t, k);
  return expand(g, ctx, sample_p(g, k, seed));
}

int SplitterFamily::eval(std::size_t fn_index, int v) const {
  if (prime == 0) return v;  // identity: the whole domain fits the range
  std::uint64_t a = fn_index + 1;
  return static_cast<int>(((a * (static_cast<std::uint64_t>(v) + 1)) % prime) %
                          static_cast<std::uint64_t>(range));
}

SplitterFamily make_splitter(int domain, int r) {
  SplitterFamily f;
  f.domain = domain;
  f.r = r;
  f.range = r * r;
  if (domain <= f.range) {
    f.prime = 0;  // identity is injective on the whole domain
    return f;
  }
  // FKS-style family: h_a(v) = ((a*(v+1)) mod p) mod r^2 over a in [1,p).
  // p > max(domain, r^3) makes some h_a injective on every r-subset.
  std::uint64_t lo = std::max<std::uint64_t>(static_cast<std::uint64_t>(domain),
                                             static_cast<std::uint64_t>(r) * r * r);
  std::uint64_t p = lo + 1;
  auto is_prime = [](std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
      if (x % d == 0) return false;
    return true;
  };
  while (!is_prime(p)) ++p;
  if (p > (1ULL << 31)) throw CapacityError("splitter domain too large");
  f.prime = p;
  return f;
}

SampleFamily deterministic_family(const Digraph& g, const Bitset& t, int k, int det_capacity) {
  if (t.none()) throw ContractViolation("deterministic_family: T must be nonempty");
  SampleFamily fam;
  SamplingContext ctx = build_context(g, t, k);
  if (k == 0) {
    fam.sets.push_back(expand(g, ctx, g.empty_set()));
    fam.provenance.push_back({0, 0, 0, 0});
    return fam;
  }

  // a+b = k + k^2 4^k symbols; anything near the shift limit is far over any
  // usable capacity
  long long symbols = k > 15 ? std::numeric_limits<long long>::max()
                             : k + static_cast<long long>(k) * k * (1LL << (2 * k));
  if (symbols > det_capacity)
    throw CapacityError("deterministic sampling infeasible: a+b = " + std::to_string(symbols) +
                        " exceeds capacity " + std::to_string(det_capacity));

  SplitterFamily splitter = make_splitter(g.slot_count(), static_cast<int>(symbols));
  int range = splitter.range;

  // all size-k subsets H of [range]
  std::vector<std::vector<int>> subsets;
  std::vector<int> h(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int from, int depth) -> void {
    if (depth == k) {
      subsets.push_back(h);
      return;
    }
    for (int x = from; x < range; ++x) {
      h[static_cast<std::size_t>(depth)] = x;
      self(self, x + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);

  for (std::size_t fi = 0; fi < splitter.size(); ++fi) {
    for (std::size_t hi = 0; hi < subsets.size(); ++hi) {
      std::vector<bool> in_h(static_cast<std::size_t>(range), false);
      for (int x : subsets[hi]) in_h[static_cast<std::size_t>(x)] = true;
      Bitset p = g.empty_set();
      g.alive().for_each([&](int v) {
        if (in_h[static_cast<std::size_t>(splitter.eval(fi, v))]) p.set(v);
      });
      fam.sets.push_back(expand(g, ctx, p));
      fam.provenance.push_back(
          {0, 0, static_cast<long long>(fi), static_cast<long long>(hi)});
    }
  }
  return fam;
}

namespace {

// Shared state of a two-phase monte-carlo covering run. Phase-2 contexts are
// cached per distinct Z1 since the reversed graph's undeletable set depends
// on the phase-1 outcome.
struct McEngine {
  const Digraph& g;
  const Bitset& t;
  int k;
  SamplingContext ctx1;
  struct Phase2 {
    Digraph g2;
    SamplingContext ctx;
  };
  std::unordered_map<Bitset, std::shared_ptr<Phase2>, BitsetHash> cache;
  std::mutex mu;

  McEngine(const Digraph& graph, const Bitset& terminals, int budget)
      : g(graph), t(terminals), k(budget), ctx1(build_context(graph, terminals, budget)) {}

  std::shared_ptr<Phase2> phase2_for(const Bitset& z1) {
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = cache.find(z1);
      if (it != cache.end()) return it->second;
    }
    auto built = std::make_shared<Phase2>();
    built->g2 = phase2_graph(g, z1);
    built->ctx = build_context(built->g2, t, k);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, fresh] = cache.emplace(z1, built);
    return it->second;
  }

  std::pair<Bitset, SampleProvenance> trial(long long i, std::uint64_t master) {
    SampleProvenance prov;
    prov.index1 = i;
    prov.seed1 = derive_seed(master, static_cast<std::uint64_t>(2 * i));
    prov.seed2 = derive_seed(master, static_cast<std::uint64_t>(2 * i + 1));
    Bitset z1 = expand(g, ctx1, sample_p(g, k, prov.seed1));
    auto ph2 = phase2_for(z1);
    Bitset z2 = expand(ph2->g2, ph2->ctx, sample_p(ph2->g2, k, prov.seed2));
    return {z1 | z2, prov};
  }
};

long long resolve_trials(const SamplingConfig& cfg, int k) {
  long long base = cfg.trials > 0 ? cfg.trials : default_trial_count(k);
  long long factor = std::max<long long>(1, cfg.trial_factor);
  if (base > (1LL << 62) / factor) return 1LL << 62;
  return base * factor;
}

void run_trials(McEngine& engine, std::uint64_t master, long long first, long long count,
                int threads, std::vector<Bitset>& sets, std::vector<SampleProvenance>& prov) {
  sets.resize(static_cast<std::size_t>(count));
  prov.resize(static_cast<std::size_t>(count));
#if defined(_OPENMP)
#pragma omp parallel for num_threads(std::max(1, threads)) schedule(dynamic, 16) \
    if (threads > 1)
#endif
  for (long long j = 0; j < count; ++j) {
    auto [z, p] = engine.trial(first + j, master);
    sets[static_cast<std::size_t>(j)] = std::move(z);
    prov[static_cast<std::size_t>(j)] = p;
  }
}

SampleFamily covering_monte_carlo(const Digraph& g, const Bitset& t, int k,
                                  const SamplingConfig& cfg) {
  McEngine engine(g, t, k);
  SampleFamily fam;
  run_trials(engine, cfg.seed, 0, resolve_trials(cfg, k), cfg.threads, fam.sets, fam.provenance);
  return fam;
}

SampleFamily covering_deterministic(const Digraph& g, const Bitset& t, int k,
                                    const SamplingConfig& cfg) {
  SampleFamily fam1 = deterministic_family(g, t, k, cfg.det_capacity);
  SampleFamily out;
  std::unordered_set<Bitset, BitsetHash> seen_z1, seen;
  for (std::size_t i = 0; i < fam1.sets.size(); ++i) {
    const Bitset& z1 = fam1.sets[i];
    if (!seen_z1.insert(z1).second) continue;
    Digraph g2 = phase2_graph(g, z1);
    SampleFamily fam2 = deterministic_family(g2, t, k, cfg.det_capacity);
    for (std::size_t j = 0; j < fam2.sets.size(); ++j) {
      Bitset z = z1 | fam2.sets[j];
      if (!seen.insert(z).second) continue;
      out.sets.push_back(std::move(z));
      out.provenance.push_back(
          {0, 0, static_cast<long long>(i), static_cast<long long>(j)});
    }
  }
  return out;
}

// every P over the union of the members, i.e. every P <= V that can matter
std::vector<std::pair<Bitset, long long>> exhaustive_distinct(const Digraph& g,
                                                              const SamplingContext& ctx) {
  Bitset universe = g.empty_set();
  for (const Bitset& m : ctx.members) universe |= m;
  std::vector<int> ids = universe.to_vector();
  std::vector<std::pair<Bitset, long long>> out;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (long long mask = 0; mask < (1LL << ids.size()); ++mask) {
    Bitset p = g.empty_set();
    for (std::size_t b = 0; b < ids.size(); ++b)
      if (mask & (1LL << b)) p.set(ids[b]);
    Bitset z = expand(g, ctx, p);
    if (seen.insert(z).second) out.emplace_back(std::move(z), mask);
  }
  return out;
}

SampleFamily covering_exhaustive(const Digraph& g, const Bitset& t, int k,
                                 const SamplingConfig& cfg) {
  if (g.vertex_count() > cfg.exhaustive_max_vertices)
    throw CapacityError("exhaustive-P mode limited to " +
                        std::to_string(cfg.exhaustive_max_vertices) + " vertices");
  SamplingContext ctx1 = build_context(g, t, k);
  SampleFamily out;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (auto& [z1, mask1] : exhaustive_distinct(g, ctx1)) {
    Digraph g2 = phase2_graph(g, z1);
    SamplingContext ctx2 = build_context(g2, t, k);
    for (auto& [z2, mask2] : exhaustive_distinct(g2, ctx2)) {
      Bitset z = z1 | z2;
      if (!seen.insert(z).second) continue;
      out.sets.push_back(std::move(z));
      out.provenance.push_back({0, 0, mask1, mask2});
    }
  }
  return out;
}

}  // namespace

SampleFamily covering(const Digraph& g, const Bitset& t, int k, const SamplingConfig& cfg) {
  if (t.none()) throw ContractViolation("covering: T must be nonempty");
  switch (cfg.mode) {
    case SamplingMode::monte_carlo: return covering_monte_carlo(g, t, k, cfg);
    case SamplingMode::deterministic: return covering_deterministic(g, t, k, cfg);
    case SamplingMode::exhaustive_p: return covering_exhaustive(g, t, k, cfg);
  }
  throw std::logic_error("unknown sampling mode");
}

SampleFamily covering_reference(const Digraph& g, const Bitset& t, int k,
                                const SamplingConfig& cfg) {
  if (t.none()) throw ContractViolation("covering_reference: T must be nonempty");
  if (cfg.mode != SamplingMode::monte_carlo)
    throw std::logic_error("covering_reference implements monte-carlo mode only");
  SampleFamily fam;
  long long trials = resolve_trials(cfg, k);
  for (long long i = 0; i < trials; ++i) {
    SampleProvenance prov;
    prov.index1 = i;
    prov.seed1 = derive_seed(cfg.seed, static_cast<std::uint64_t>(2 * i));
    prov.seed2 = derive_seed(cfg.seed, static_cast<std::uint64_t>(2 * i + 1));
    Bitset z1 = expand_reference(g, t, k, sample_p(g, k, prov.seed1));
    Digraph g2 = phase2_graph(g, z1);
    Bitset z2 = expand_reference(g2, t, k, sample_p(g2, k, prov.seed2));
    fam.sets.push_back(z1 | z2);
    fam.provenance.push_back(prov);
  }
  return fam;
}

struct CoveringStream::Impl {
  bool materialized = false;
  SampleFamily family;
  std::size_t family_pos = 0;

  std::unique_ptr<McEngine> engine;
  std::uint64_t master = 0;
  long long total = 0;
  long long next_trial = 0;
  int threads = 1;
  std::vector<Bitset> buffer;
  std::vector<SampleProvenance> buffer_prov;
  std::size_t buffer_pos = 0;
  long long consumed = 0;

  static constexpr long long kChunk = 256;
};

CoveringStream::CoveringStream(const Digraph& g, const Bitset& t, int k,
                               const SamplingConfig& cfg)
    : impl_(std::make_unique<Impl>()) {
  if (cfg.mode == SamplingMode::monte_carlo) {
    impl_->engine = std::make_unique<McEngine>(g, t, k);
    impl_->master = cfg.seed;
    impl_->total = resolve_trials(cfg, k);
    impl_->threads = cfg.threads;
  } else {
    impl_->materialized = true;
    impl_->family = covering(g, t, k, cfg);
    impl_->consumed = static_cast<long long>(impl_->family.sets.size());
  }
}

CoveringStream::~CoveringStream() = default;

std::optional<Bitset> CoveringStream::next() {
  Impl& s = *impl_;
  if (s.materialized) {
    if (s.family_pos >= s.family.sets.size()) return std::nullopt;
    return s.family.sets[s.family_pos++];
  }
  if (s.buffer_pos >= s.buffer.size()) {
    long long count = std::min(Impl::kChunk, s.total - s.next_trial);
    if (count <= 0) return std::nullopt;
    run_trials(*s.engine, s.master, s.next_trial, count, s.threads, s.buffer, s.buffer_prov);
    s.next_trial += count;
    s.consumed = s.next_trial;
    s.buffer_pos = 0;
  }
  return s.buffer[s.buffer_pos++];
}

long long CoveringStream::consumed() const { return impl_->consumed; }

}  // namespace sdfvs
