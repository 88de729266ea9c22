#pragma once

#include "sdfvs/instances.hpp"

namespace sdfvs {

// Result of contracting G onto C: the graph keeps every arc of G[C] and gains
// an arc (a,b) for every a->b walk through the outside; s_mask marks the arcs
// standing in for walks that used an S-arc.
struct TorsoResult {
  Digraph graph;
  std::vector<char> s_mask;
};

TorsoResult torso(const Digraph& g, const Bitset& c, const std::vector<char>& s_mask);

// Definition of the reduced instance I/Z: torso on the complement of Z.
CompressionInstance reduce_instance(const CompressionInstance& inst, const Bitset& z);

}  // namespace sdfvs
