#include "sdfvs/separators.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

namespace sdfvs {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

void check_terminal_sets(const Digraph& g, const Bitset& x, const Bitset& y) {
  if (x.none() || y.none()) throw ContractViolation("terminal sets must be nonempty");
  if (x.intersects(y)) throw ContractViolation("terminal sets must be disjoint");
  if (!x.subset_of(g.alive()) || !y.subset_of(g.alive()))
    throw ContractViolation("terminal sets must be alive");
}

// Unit-capacity vertex-split flow network. Node in(v)=2v, out(v)=2v+1,
// source=2n, sink=2n+1.
struct FlowNet {
  struct Edge {
    int to;
    int cap;
    int rev;
  };
  int n_nodes;
  std::vector<std::vector<Edge>> adj;

  explicit FlowNet(int nodes) : n_nodes(nodes), adj(nodes) {}

  void add(int u, int v, int cap) {
    adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
    adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
  }

  // one BFS augmentation; returns pushed amount (0 if no path)
  int augment(int s, int t) {
    std::vector<std::pair<int, int>> parent(n_nodes, {-1, -1});  // (node, edge idx)
    std::deque<int> q{s};
    parent[s] = {s, -1};
    while (!q.empty() && parent[t].first == -1) {
      int u = q.front();
      q.pop_front();
      for (int i = 0; i < static_cast<int>(adj[u].size()); ++i) {
        const Edge& e = adj[u][i];
        if (e.cap <= 0 || parent[e.to].first != -1) continue;
        parent[e.to] = {u, i};
        q.push_back(e.to);
      }
    }
    if (parent[t].first == -1) return 0;
    int bottleneck = kInf;
    for (int v = t; v != s;) {
      auto [u, i] = parent[v];
      bottleneck = std::min(bottleneck, adj[u][i].cap);
      v = u;
    }
    for (int v = t; v != s;) {
      auto [u, i] = parent[v];
      adj[u][i].cap -= bottleneck;
      adj[adj[u][i].to][adj[u][i].rev].cap += bottleneck;
      v = u;
    }
    return bottleneck;
  }

  // nodes that can reach t in the residual network
  std::vector<bool> reaches_sink(int t) const {
    std::vector<bool> seen(n_nodes, false);
    std::deque<int> q{t};
    seen[t] = true;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (const Edge& e : adj[x]) {
        // the reverse entry tells us whether e.to -> x still has capacity
        int back_cap = adj[e.to][e.rev].cap;
        if (back_cap > 0 && !seen[e.to]) {
          seen[e.to] = true;
          q.push_back(e.to);
        }
      }
    }
    return seen;
  }
};

bool usable(const Digraph& g, const Bitset& removed, int v) {
  return g.is_alive(v) && !removed.test(v);
}

// X->Y path whose internal vertices are all uncuttable (in X, Y or
// undeletable) survives every separator.
bool separation_impossible(const Digraph& g, const Bitset& x, const Bitset& y,
                           const Bitset& removed) {
  Bitset seen = g.empty_set();
  std::vector<int> stack;
  x.for_each([&](int v) {
    if (usable(g, removed, v)) {
      seen.set(v);
      stack.push_back(v);
    }
  });
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (y.test(v)) return true;
    for (auto [w, ai] : g.out(v)) {
      (void)ai;
      if (!usable(g, removed, w) || seen.test(w)) continue;
      if (y.test(w)) return true;
      if (!g.undeletable().test(w) && !x.test(w)) continue;
      seen.set(w);
      stack.push_back(w);
    }
  }
  return false;
}

}  // namespace

namespace detail {

MinCutResult min_cut_overlay(const Digraph& g, const Bitset& x, const Bitset& y, int budget,
                             const Bitset& removed) {
  MinCutResult res;
  if (separation_impossible(g, x, y, removed)) {
    res.status = MinCutResult::Status::inseparable;
    return res;
  }

  const int n = g.slot_count();
  const int source = 2 * n, sink = 2 * n + 1;
  FlowNet net(2 * n + 2);
  for (int v = 0; v < n; ++v) {
    if (!usable(g, removed, v)) continue;
    if (x.test(v)) {
      net.add(source, 2 * v + 1, kInf);
    } else if (y.test(v)) {
      net.add(2 * v, sink, kInf);
    } else {
      net.add(2 * v, 2 * v + 1, g.undeletable().test(v) ? kInf : 1);
    }
  }
  for (const Arc& a : g.arcs()) {
    if (!usable(g, removed, a.tail) || !usable(g, removed, a.head)) continue;
    if (y.test(a.tail)) continue;
    net.add(2 * a.tail + 1, 2 * a.head, kInf);
  }

  int flow = 0;
  while (true) {
    if (flow > budget) {
      res.status = MinCutResult::Status::exceeds_budget;
      return res;
    }
    int pushed = net.augment(source, sink);
    if (pushed == 0) break;
    flow += pushed;
  }
  if (flow > budget) {
    res.status = MinCutResult::Status::exceeds_budget;
    return res;
  }

  std::vector<bool> sink_side = net.reaches_sink(sink);
  Bitset cut = g.empty_set();
  for (int v = 0; v < n; ++v) {
    if (!usable(g, removed, v) || x.test(v) || y.test(v) || g.undeletable().test(v)) continue;
    if (!sink_side[2 * v] && sink_side[2 * v + 1]) cut.set(v);
  }
  res.status = MinCutResult::Status::found;
  res.size = flow;
  res.cut = std::move(cut);
  return res;
}

}  // namespace detail

bool is_separator(const Digraph& g, const Bitset& x, const Bitset& y, const Bitset& w) {
  check_terminal_sets(g, x, y);
  if (w.intersects(x) || w.intersects(y) || w.intersects(g.undeletable())) return false;
  if (!w.subset_of(g.alive())) return false;
  return !reach_forward(g, x, w).intersects(y);
}

bool is_minimal_separator(const Digraph& g, const Bitset& x, const Bitset& y, const Bitset& w) {
  if (!is_separator(g, x, y, w)) return false;
  // dropping any single vertex must break separation
  bool minimal = true;
  w.for_each([&](int v) {
    if (!minimal) return;
    Bitset rest = w;
    rest.reset(v);
    if (!reach_forward(g, x, rest).intersects(y)) minimal = false;
  });
  return minimal;
}

MinCutResult min_vertex_cut(const Digraph& g, const Bitset& x, const Bitset& y, int budget) {
  check_terminal_sets(g, x, y);
  return detail::min_cut_overlay(g, x, y, budget, g.empty_set());
}

bool is_important(const Digraph& g, const Bitset& x, const Bitset& y, const Bitset& w) {
  check_terminal_sets(g, x, y);
  if (!w.subset_of(g.alive())) return false;
  if (w.intersects(x) || w.intersects(y) || w.intersects(g.undeletable())) return false;
  Bitset reach = reach_forward(g, x, w);
  if (reach.intersects(y)) return false;  // not even a separator
  MinCutResult mc = detail::min_cut_overlay(g, reach, y, w.count(), g.empty_set());
  return mc.status == MinCutResult::Status::found && mc.size == w.count() && mc.cut == w;
}

namespace {

void enumerate_rec(const Digraph& g, Bitset x, const Bitset& y, int budget, Bitset removed,
                   Bitset acc, std::vector<Bitset>& out) {
  MinCutResult mc = detail::min_cut_overlay(g, x, y, budget, removed);
  if (mc.status != MinCutResult::Status::found) return;
  if (mc.size == 0) {
    out.push_back(std::move(acc));
    return;
  }
  int v = mc.cut.first();
  {
    // v joins the separator
    Bitset acc2 = acc;
    acc2.set(v);
    Bitset removed2 = removed;
    removed2.set(v);
    enumerate_rec(g, x, y, budget - 1, std::move(removed2), std::move(acc2), out);
  }
  // v stays on the source side
  x.set(v);
  enumerate_rec(g, std::move(x), y, budget, std::move(removed), std::move(acc), out);
}

}  // namespace

SeparatorList enumerate_important_separators(const Digraph& g, const Bitset& x, const Bitset& y,
                                             int k) {
  check_terminal_sets(g, x, y);
  SeparatorList out;
  MinCutResult probe = detail::min_cut_overlay(g, x, y, k, g.empty_set());
  if (probe.status == MinCutResult::Status::inseparable) {
    out.inseparable = true;
    return out;
  }
  if (probe.status == MinCutResult::Status::exceeds_budget) return out;

  std::vector<Bitset> candidates;
  enumerate_rec(g, x, y, k, g.empty_set(), g.empty_set(), candidates);

  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> kept;
  for (Bitset& c : candidates) {
    if (!seen.insert(c).second) continue;
    if (is_important(g, x, y, c)) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.to_vector() < b.to_vector();
  });
  for (Bitset& c : kept) out.items.push_back({std::move(c), x, y});
  return out;
}

std::vector<Separator> enumerate_Ik(const Digraph& g, const Bitset& t, int k) {
  if (t.none()) throw ContractViolation("enumerate_Ik: T must be nonempty");
  std::vector<Separator> out;
  std::unordered_set<Bitset, BitsetHash> seen;
  g.alive().for_each([&](int v) {
    if (t.test(v)) return;
    SeparatorList seps = enumerate_important_separators(g, g.singleton(v), t, k);
    if (seps.inseparable) return;  // no v-T separator exists at all
    for (Separator& s : seps.items)
      if (seen.insert(s.vertices).second) out.push_back(std::move(s));
  });
  return out;
}

ShadowPair shadow(const Digraph& g, const Bitset& t, const Bitset& w) {
  if (w.intersects(t)) throw ContractViolation("shadow: W intersects T");
  ShadowPair sp;
  sp.forward = g.alive() - reach_forward(g, t, w) - w - t;
  sp.backward = g.alive() - reach_backward(g, t, w) - w - t;
  return sp;
}

Bitset exact_reverse_shadow(const Digraph& g, const Bitset& t, const Bitset& w) {
  if (w.intersects(t)) throw ContractViolation("exact_reverse_shadow: W intersects T");
  // v is separated by W, and every w in W sits on some v->T path avoiding the
  // rest of W (minimality, batched as one reachability pass per w)
  Bitset result = g.alive() - reach_backward(g, t, w) - w - t;
  w.for_each([&](int v) {
    Bitset rest = w;
    rest.reset(v);
    result &= reach_backward(g, t, rest);
  });
  return result;
}

Bitset exact_forward_shadow(const Digraph& g, const Bitset& t, const Bitset& w) {
  if (w.intersects(t)) throw ContractViolation("exact_forward_shadow: W intersects T");
  Bitset result = g.alive() - reach_forward(g, t, w) - w - t;
  w.for_each([&](int v) {
    Bitset rest = w;
    rest.reset(v);
    result &= reach_forward(g, t, rest);
  });
  return result;
}

bool is_thin(const Digraph& g, const Bitset& t, const Bitset& w) {
  if (w.intersects(t)) throw ContractViolation("is_thin: W intersects T");
  bool thin = true;
  w.for_each([&](int v) {
    if (!thin) return;
    Bitset rest = w;
    rest.reset(v);
    if (!reach_backward(g, t, rest).test(v)) thin = false;
  });
  return thin;
}

}  // namespace sdfvs
