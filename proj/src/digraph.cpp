#include "sdfvs/digraph.hpp"

#include <algorithm>

namespace sdfvs {

namespace {

Bitset widen(const Bitset& b, int n) {
  Bitset out(static_cast<std::size_t>(n));
  b.for_each([&](int i) { out.set(i); });
  return out;
}

}  // namespace

Digraph assemble_graph(int n, Bitset alive, Bitset undeletable, std::vector<Arc> arcs) {
  Digraph g;
  g.n_ = n;
  g.alive_ = std::move(alive);
  g.undeletable_ = std::move(undeletable);
  g.arcs_ = std::move(arcs);
  g.out_.assign(static_cast<std::size_t>(n), {});
  g.in_.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < static_cast<int>(g.arcs_.size()); ++i) {
    const Arc& a = g.arcs_[i];
    g.out_[a.tail].emplace_back(a.head, i);
    g.in_[a.head].emplace_back(a.tail, i);
  }
  return g;
}

Digraph Digraph::build(int vertex_count, std::span<const Arc> arcs, const Bitset& undeletable) {
  if (vertex_count < 0) throw ContractViolation("negative vertex count");
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= vertex_count || a.head < 0 || a.head >= vertex_count)
      throw ContractViolation("arc endpoint out of range");
  }
  undeletable.for_each([&](int v) {
    if (v >= vertex_count) throw ContractViolation("undeletable vertex out of range");
  });
  Bitset alive(static_cast<std::size_t>(vertex_count));
  for (int v = 0; v < vertex_count; ++v) alive.set(v);
  return assemble_graph(vertex_count, std::move(alive),
                        widen(undeletable, vertex_count),
                        std::vector<Arc>(arcs.begin(), arcs.end()));
}

Bitset reach_forward(const Digraph& g, const Bitset& from, const Bitset& removed) {
  if (from.intersects(removed))
    throw ContractViolation("reach_forward: source intersects removed set");
  Bitset seen = g.empty_set();
  std::vector<VertexId> stack;
  from.for_each([&](int v) {
    if (g.is_alive(v)) {
      seen.set(v);
      stack.push_back(v);
    }
  });
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (auto [w, ai] : g.out(v)) {
      (void)ai;
      if (!g.is_alive(w) || removed.test(w) || seen.test(w)) continue;
      seen.set(w);
      stack.push_back(w);
    }
  }
  return seen;
}

Bitset reach_backward(const Digraph& g, const Bitset& to, const Bitset& removed) {
  if (to.intersects(removed))
    throw ContractViolation("reach_backward: target intersects removed set");
  Bitset seen = g.empty_set();
  std::vector<VertexId> stack;
  to.for_each([&](int v) {
    if (g.is_alive(v)) {
      seen.set(v);
      stack.push_back(v);
    }
  });
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (auto [w, ai] : g.in(v)) {
      (void)ai;
      if (!g.is_alive(w) || removed.test(w) || seen.test(w)) continue;
      seen.set(w);
      stack.push_back(w);
    }
  }
  return seen;
}

DerivedGraph reverse(const Digraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) arcs.push_back({a.head, a.tail});
  std::vector<int> origin(arcs.size());
  for (int i = 0; i < static_cast<int>(origin.size()); ++i) origin[i] = i;
  return {assemble_graph(g.slot_count(), g.alive(), g.undeletable(), std::move(arcs)),
          std::move(origin)};
}

// Iterative Tarjan; Tarjan finishes components in reverse topological order,
// so the collected list is flipped before returning.
SccDecomposition scc(const Digraph& g) {
  const int n = g.slot_count();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  SccDecomposition out;
  out.component_of.assign(n, -1);
  int next_index = 0;

  struct Frame {
    VertexId v;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (!g.is_alive(root) || index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      auto edges = g.out(f.v);
      if (f.edge < edges.size()) {
        VertexId w = edges[f.edge].first;
        ++f.edge;
        if (!g.is_alive(w)) continue;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        VertexId v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<VertexId> comp;
          while (true) {
            VertexId w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
            if (w == v) break;
          }
          std::sort(comp.begin(), comp.end());
          out.components.push_back(std::move(comp));
        }
      }
    }
  }

  std::reverse(out.components.begin(), out.components.end());
  for (int c = 0; c < static_cast<int>(out.components.size()); ++c)
    for (VertexId v : out.components[c]) out.component_of[v] = c;
  return out;
}

namespace {

DerivedGraph subgraph_on(const Digraph& g, const Bitset& keep) {
  Bitset alive = g.alive() & keep;
  Bitset undeletable = g.undeletable() & alive;
  std::vector<Arc> arcs;
  std::vector<int> origin;
  for (int i = 0; i < g.arc_count(); ++i) {
    const Arc& a = g.arc(i);
    if (alive.test(a.tail) && alive.test(a.head)) {
      arcs.push_back(a);
      origin.push_back(i);
    }
  }
  return {assemble_graph(g.slot_count(), std::move(alive), std::move(undeletable), std::move(arcs)),
          std::move(origin)};
}

}  // namespace

DerivedGraph delete_vertices(const Digraph& g, const Bitset& del) {
  if (del.intersects(g.undeletable()))
    throw ContractViolation("delete_vertices: set touches undeletable vertices");
  if (!del.subset_of(g.alive()))
    throw ContractViolation("delete_vertices: set touches dead vertices");
  return subgraph_on(g, g.alive() - del);
}

DerivedGraph induce(const Digraph& g, const Bitset& keep) {
  return subgraph_on(g, keep);
}

}  // namespace sdfvs
