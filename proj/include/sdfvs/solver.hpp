#pragma once

#include <optional>
#include <string>

#include "sdfvs/instances.hpp"
#include "sdfvs/sampling.hpp"
#include "sdfvs/torso.hpp"

namespace sdfvs {

class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// node/time budget exhausted before an answer was reached
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Auxiliary graph of the critical-vertex enumeration: two copies per vertex
// plus terminals s and t. S-arcs cross from out-copy to in-copy, other arcs
// stay on the out-level, and every in-copy reaches t.
struct AuxCriticalGraph {
  Digraph graph;
  VertexId source = 0;  // s
  VertexId sink = 0;    // t
  static VertexId in_node(VertexId v) { return 2 * v; }
  static VertexId out_node(VertexId v) { return 2 * v + 1; }
};

// G plus a sink t with an arc (u,t) for every tail of an S-arc.
struct AugmentedGraph {
  Digraph graph;
  VertexId sink = 0;
};

AuxCriticalGraph build_aux_critical_graph(const Digraph& g, const std::vector<char>& s_mask,
                                          const Bitset& t0);
AugmentedGraph build_augmented_graph(const Digraph& g, const std::vector<char>& s_mask);

// vertex form -> edge form: S' = arcs incident to an S-vertex
EdgeInstance vertex_to_edge(const VertexInstance& inst);
// edge form -> vertex form: subdivide S-arcs through fresh vertices; with
// subdivide_all every arc is subdivided (the literal reduction), kept for
// differential testing
VertexInstance edge_to_vertex(const EdgeInstance& inst, bool subdivide_all = false);

// Repeatedly drop T-vertices that cannot reach any S-arc tail. Deletable ones
// leave the graph as well; undeletable ones can only leave T.
CompressionInstance preprocess(const CompressionInstance& inst);

// Superset of the k-critical vertices with respect to T0: vertices whose
// in-copy lies in some important s-t separator of size <= 2k in the auxiliary
// graph. |F| <= 2k * 4^(2k).
Bitset critical_vertex_superset(const Digraph& g, const std::vector<char>& s_mask,
                                const Bitset& t0, int k);

struct BranchChild {
  CompressionInstance instance;
  std::vector<VertexId> deleted;
};

// The two branching rules: delete one vertex of F \ T, or delete an important
// T0-({t} u (T\T0)) separator of the augmented graph. Requires a preprocessed
// instance so every separator is nonempty.
std::vector<BranchChild> branch(const CompressionInstance& inst, const Bitset& f);

struct SolverConfig {
  SamplingConfig sampling;
  int max_retries = 1;          // monte-carlo NO answers retry with doubled trials
  long long max_nodes = -1;     // < 0: unlimited
  double timeout_seconds = -1;  // < 0: unlimited
};

struct SolveStats {
  long long nodes = 0;            // disjoint-compression search nodes expanded
  long long covering_trials = 0;  // covering sets consumed across all nodes
  int retries = 0;
};

struct SolveResult {
  std::optional<Solution> solution;
  SolveStats stats;
  bool exact = false;  // NO answers are unconditional (non monte-carlo mode)
};

std::optional<Solution> solve_disjoint_compression(const CompressionInstance& inst,
                                                   const SolverConfig& cfg, SolveStats& stats);
std::optional<Solution> solve_compression(const CompressionInstance& inst, const SolverConfig& cfg,
                                          SolveStats& stats);

// Iterative compression over the whole instance. YES answers carry a
// certified solution in original vertex ids.
SolveResult solve(const EdgeInstance& inst, const SolverConfig& cfg);

}  // namespace sdfvs
