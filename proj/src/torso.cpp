#include "sdfvs/torso.hpp"

#include <vector>

namespace sdfvs {

// Per source a in C: a two-state sweep over the outside of C where the state
// records whether an S-arc has been traversed (absorbing); entering C ends a
// walk and emits the contracted arc. Length-1 walks (the arcs of G[C]) fall
// out of the same loop.
TorsoResult torso(const Digraph& g, const Bitset& c, const std::vector<char>& s_mask) {
  if (!c.subset_of(g.alive())) throw ContractViolation("torso: C not a subset of V(G)");

  const int n = g.slot_count();
  std::vector<Arc> arcs;
  std::vector<char> out_s;

  // reached[b*2+f] for targets b in C, visited[x*2+f] for outside vertices
  std::vector<char> reached(static_cast<std::size_t>(2 * n));
  std::vector<char> visited(static_cast<std::size_t>(2 * n));
  std::vector<std::pair<VertexId, char>> stack;

  c.for_each([&](int a) {
    std::fill(reached.begin(), reached.end(), 0);
    std::fill(visited.begin(), visited.end(), 0);
    stack.clear();

    for (auto [w, ai] : g.out(a)) {
      if (!g.is_alive(w)) continue;
      char f = s_mask[ai] ? 1 : 0;
      if (c.test(w)) {
        reached[2 * w + f] = 1;
      } else if (!visited[2 * w + f]) {
        visited[2 * w + f] = 1;
        stack.push_back({w, f});
      }
    }
    while (!stack.empty()) {
      auto [x, f] = stack.back();
      stack.pop_back();
      for (auto [w, ai] : g.out(x)) {
        if (!g.is_alive(w)) continue;
        char f2 = (f || s_mask[ai]) ? 1 : 0;
        if (c.test(w)) {
          reached[2 * w + f2] = 1;
        } else if (!visited[2 * w + f2]) {
          visited[2 * w + f2] = 1;
          stack.push_back({w, f2});
        }
      }
    }

    // at most two copies of (a,b): a plain one and an S' one
    c.for_each([&](int b) {
      if (reached[2 * b]) {
        arcs.push_back({a, b});
        out_s.push_back(0);
      }
      if (reached[2 * b + 1]) {
        arcs.push_back({a, b});
        out_s.push_back(1);
      }
    });
  });

  TorsoResult result;
  result.graph = assemble_graph(n, c, g.undeletable() & c, std::move(arcs));
  result.s_mask = std::move(out_s);
  return result;
}

CompressionInstance reduce_instance(const CompressionInstance& inst, const Bitset& z) {
  if (z.intersects(inst.old_solution))
    throw ContractViolation("reduce_instance: Z intersects T");
  TorsoResult t = torso(inst.graph, inst.graph.alive() - z, inst.s_mask);
  CompressionInstance out;
  out.graph = std::move(t.graph);
  out.s_mask = std::move(t.s_mask);
  out.old_solution = inst.old_solution;
  out.budget = inst.budget;
  return out;
}

}  // namespace sdfvs
