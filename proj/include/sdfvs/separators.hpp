#pragma once

#include <vector>

#include "sdfvs/digraph.hpp"

namespace sdfvs {

// An X-Y vertex separator: disjoint from X, Y and the undeletable set, and
// removing it leaves no X->Y path.
struct Separator {
  Bitset vertices;
  Bitset source;  // X
  Bitset sink;    // Y
};

struct ShadowPair {
  Bitset forward;   // vertices cut off from T's light
  Bitset backward;  // vertices that cannot reach T
};

struct MinCutResult {
  enum class Status { found, exceeds_budget, inseparable };
  Status status = Status::found;
  int size = 0;  // lambda, when found
  Bitset cut;    // the furthest minimum separator, when found
};

struct SeparatorList {
  bool inseparable = false;
  std::vector<Separator> items;
};

bool is_separator(const Digraph& g, const Bitset& x, const Bitset& y, const Bitset& w);
bool is_minimal_separator(const Digraph& g, const Bitset& x, const Bitset& y, const Bitset& w);

// Minimum X-Y vertex cut within `budget`, returned together with the unique
// minimum separator whose removal leaves the largest forward reach of X.
// `inseparable` is reported when an X->Y arc or an all-undeletable path rules
// out every separator.
MinCutResult min_vertex_cut(const Digraph& g, const Bitset& x, const Bitset& y, int budget);

// Definition check: W is a minimal separator not dominated by any separator
// of at most the same size with strictly larger forward reach of X.
bool is_important(const Digraph& g, const Bitset& x, const Bitset& y, const Bitset& w);

// All important X-Y separators of size <= k (at most 4^k of them).
SeparatorList enumerate_important_separators(const Digraph& g, const Bitset& x, const Bitset& y,
                                             int k);

// The collection I_k: every set that is an important v-T separator of size
// <= k for some vertex v outside T, deduplicated as vertex sets.
std::vector<Separator> enumerate_Ik(const Digraph& g, const Bitset& t, int k);

ShadowPair shadow(const Digraph& g, const Bitset& t, const Bitset& w);

// Vertices v for which W is a *minimal* v-T (resp. T-v) separator.
Bitset exact_reverse_shadow(const Digraph& g, const Bitset& t, const Bitset& w);
Bitset exact_forward_shadow(const Digraph& g, const Bitset& t, const Bitset& w);

// No vertex of W lies in the reverse shadow of the rest of W.
bool is_thin(const Digraph& g, const Bitset& t, const Bitset& w);

namespace detail {
// Overlay variant used by the enumeration recursion: `removed` vertices are
// treated as deleted without rebuilding the graph.
MinCutResult min_cut_overlay(const Digraph& g, const Bitset& x, const Bitset& y, int budget,
                             const Bitset& removed);
}  // namespace detail

}  // namespace sdfvs
