#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sdfvs/separators.hpp"

namespace sdfvs {

enum class SamplingMode { monte_carlo, deterministic, exhaustive_p };

const char* to_string(SamplingMode mode);

// Raised when deterministic or exhaustive-P mode is asked for parameters it
// cannot realize (splitter symbol count over the threshold, graph too large).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SamplingConfig {
  SamplingMode mode = SamplingMode::monte_carlo;
  long long trials = 0;        // <= 0 selects the default 4^(k^2)+64
  std::uint64_t seed = 0;
  long long trial_factor = 1;  // scales the trial count (doubled on retry)
  int det_capacity = 64;       // ceiling for the splitter symbol count a+b
  int exhaustive_max_vertices = 16;
  int threads = 1;
};

struct SampleProvenance {
  std::uint64_t seed1 = 0;  // phase-1 / phase-2 seeds in monte-carlo mode
  std::uint64_t seed2 = 0;
  long long index1 = -1;  // trial index, or (function,subset)/P-mask indices
  long long index2 = -1;
};

struct SampleFamily {
  std::vector<Bitset> sets;
  std::vector<SampleProvenance> provenance;
};

long long default_trial_count(int k);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// One draw of the improved random sampling: pick P with per-vertex probability
// 4^-k, then take the union of the exact reverse shadows of every member of
// I_k contained in P. The result avoids T and the undeletable set.
Bitset random_set(const Digraph& g, const Bitset& t, int k, std::uint64_t seed);

// A family of functions [domain] -> [r^2] such that every r-subset of the
// domain is mapped injectively by at least one function.
struct SplitterFamily {
  int domain = 0;
  int r = 0;
  int range = 0;
  std::uint64_t prime = 0;  // 0 when the identity function suffices
  std::size_t size() const { return prime == 0 ? 1 : static_cast<std::size_t>(prime - 1); }
  int eval(std::size_t fn_index, int v) const;
};

SplitterFamily make_splitter(int domain, int r);

// Derandomized sampling: P-sets indexed by (splitter function, size-k subset
// of its range), each expanded exactly as in random_set.
SampleFamily deterministic_family(const Digraph& g, const Bitset& t, int k, int det_capacity = 64);

// Two-phase covering. Phase 2 runs on the reversed graph with the phase-1
// result marked undeletable, so the phases of one trial are ordered.
SampleFamily covering(const Digraph& g, const Bitset& t, int k, const SamplingConfig& cfg);

// Straight-line serial implementation of monte-carlo covering that expands
// each trial from first principles (subset enumeration instead of the shared
// I_k table, no parallelism). Kept as the reference the kernel is tested and
// benchmarked against.
SampleFamily covering_reference(const Digraph& g, const Bitset& t, int k,
                                const SamplingConfig& cfg);

// Incremental covering used by the solver: yields trial sets in family order
// without materializing every trial up front.
class CoveringStream {
 public:
  CoveringStream(const Digraph& g, const Bitset& t, int k, const SamplingConfig& cfg);
  ~CoveringStream();
  CoveringStream(const CoveringStream&) = delete;
  CoveringStream& operator=(const CoveringStream&) = delete;

  std::optional<Bitset> next();
  long long consumed() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace sdfvs
