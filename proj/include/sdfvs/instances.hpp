#pragma once

#include <optional>
#include <vector>

#include "sdfvs/digraph.hpp"

namespace sdfvs {

// Edge-subset instance (G, S \subseteq E, k). S membership is a mask parallel
// to the graph's arc list, so parallel arcs can differ in S membership.
struct EdgeInstance {
  Digraph graph;
  std::vector<char> s_mask;
  int budget = 0;
};

// Vertex-subset instance (G, S \subseteq V, k).
struct VertexInstance {
  Digraph graph;
  Bitset s_vertices;
  int budget = 0;
};

// Disjoint compression instance (G, S, T, k): G minus T has no S-closed-walk
// and the sought deletion set must avoid T.
struct CompressionInstance {
  Digraph graph;
  std::vector<char> s_mask;
  Bitset old_solution;  // T
  int budget = 0;
};

struct Solution {
  std::vector<VertexId> deleted;  // original identifiers, sorted
  bool certified = false;
};

// tails (S-) and heads (S+) of the S-arcs
struct EndpointSets {
  Bitset s_minus;
  Bitset s_plus;
};

EndpointSets endpoint_sets(const Digraph& g, const std::vector<char>& s_mask);

// true iff some S-arc has both endpoints in one strongly connected component
bool has_s_closed_walk(const Digraph& g, const std::vector<char>& s_mask);
// variant: some S-closed-walk passes through v
bool has_s_closed_walk_through(const Digraph& g, const std::vector<char>& s_mask, VertexId v);

bool verify_solution(const EdgeInstance& inst, const Bitset& deleted);
bool verify_solution(const CompressionInstance& inst, const Bitset& deleted);

// Validates the compression invariant (G minus T is S-closed-walk free).
CompressionInstance make_compression_instance(Digraph graph, std::vector<char> s_mask,
                                              Bitset old_solution, int budget);

// S mask carried through a derived graph (delete/induce/reverse).
std::vector<char> remap_s_mask(const std::vector<char>& s_mask, const std::vector<int>& arc_origin);

}  // namespace sdfvs
