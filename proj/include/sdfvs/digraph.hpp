#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sdfvs/bitset.hpp"

namespace sdfvs {

using VertexId = int;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  bool operator==(const Arc&) const = default;
};

// Raised when an operation's stated precondition is violated.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Directed multigraph over a fixed slot space [0, slot_count). Vertex ids are
// stable: derived graphs (reverse, delete, induce, torso) keep the slot space
// and only change which slots are alive, so solutions always name original
// vertices. Values are immutable once built.
class Digraph {
 public:
  Digraph() = default;

  // `undeletable` may be smaller than n; it is widened as needed.
  static Digraph build(int vertex_count, std::span<const Arc> arcs, const Bitset& undeletable);
  static Digraph build(int vertex_count, std::initializer_list<Arc> arcs) {
    std::vector<Arc> a(arcs);
    return build(vertex_count, a, Bitset(static_cast<std::size_t>(vertex_count)));
  }

  int slot_count() const { return n_; }
  const Bitset& alive() const { return alive_; }
  bool is_alive(VertexId v) const { return alive_.test(v); }
  int vertex_count() const { return alive_.count(); }
  const Bitset& undeletable() const { return undeletable_; }

  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int i) const { return arcs_[i]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // adjacency entries are (neighbor, arc index)
  std::span<const std::pair<VertexId, int>> out(VertexId v) const { return out_[v]; }
  std::span<const std::pair<VertexId, int>> in(VertexId v) const { return in_[v]; }

  Bitset empty_set() const { return Bitset(static_cast<std::size_t>(n_)); }
  Bitset singleton(VertexId v) const {
    Bitset b(static_cast<std::size_t>(n_));
    b.set(v);
    return b;
  }

 private:
  friend Digraph assemble_graph(int, Bitset, Bitset, std::vector<Arc>);

  int n_ = 0;
  Bitset alive_;
  Bitset undeletable_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::pair<VertexId, int>>> out_, in_;
};

struct SccDecomposition {
  // topological order of the condensation: arcs between components only go
  // from lower to higher index, so the last entry is a sink component
  std::vector<std::vector<VertexId>> components;
  std::vector<int> component_of;  // -1 for dead slots

  bool same_component(VertexId u, VertexId v) const {
    return component_of[u] >= 0 && component_of[u] == component_of[v];
  }
};

// A graph derived from another one, with arc provenance: new arc i came from
// arc arc_origin[i] of the source graph.
struct DerivedGraph {
  Digraph graph;
  std::vector<int> arc_origin;
};

// internal assembly (no validation); alive/undeletable must fit the arcs
Digraph assemble_graph(int n, Bitset alive, Bitset undeletable, std::vector<Arc> arcs);

// vertices of X reachable-from-X in G minus `removed` (X itself included)
Bitset reach_forward(const Digraph& g, const Bitset& from, const Bitset& removed);
// vertices that can reach X in G minus `removed`
Bitset reach_backward(const Digraph& g, const Bitset& to, const Bitset& removed);

DerivedGraph reverse(const Digraph& g);
SccDecomposition scc(const Digraph& g);

// Deleting an undeletable or dead vertex is a contract violation.
DerivedGraph delete_vertices(const Digraph& g, const Bitset& del);
// Induced subgraph on `keep`; unlike delete_vertices this may drop
// undeletable vertices (used when growing prefixes of a graph).
DerivedGraph induce(const Digraph& g, const Bitset& keep);

}  // namespace sdfvs
