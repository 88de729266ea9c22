#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "sdfvs/torso.hpp"

using namespace sdfvs;
using namespace sdfvs::testing;

namespace {

using FlaggedArc = std::tuple<int, int, bool>;

std::set<FlaggedArc> arc_set(const Digraph& g, const std::vector<char>& mask) {
  std::set<FlaggedArc> out;
  for (int i = 0; i < g.arc_count(); ++i)
    out.insert({g.arc(i).tail, g.arc(i).head, mask[static_cast<std::size_t>(i)] != 0});
  return out;
}

bool has_arc(const TorsoResult& t, Arc a, bool in_s) {
  for (int i = 0; i < t.graph.arc_count(); ++i)
    if (t.graph.arc(i) == a && (t.s_mask[static_cast<std::size_t>(i)] != 0) == in_s) return true;
  return false;
}

CompressionInstance random_compression_fixture(std::mt19937_64& rng, int n) {
  while (true) {
    Digraph g = random_digraph(rng, n, 3 * n);
    std::vector<char> mask = random_s_mask(rng, g, 0.4);
    // grow T until G \ T is clean
    Bitset t = g.empty_set();
    for (int guard = 0; guard < n; ++guard) {
      DerivedGraph d = induce(g, g.alive() - t);
      if (!has_s_closed_walk(d.graph, remap_s_mask(mask, d.arc_origin))) break;
      t.set(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
    }
    DerivedGraph d = induce(g, g.alive() - t);
    if (has_s_closed_walk(d.graph, remap_s_mask(mask, d.arc_origin))) continue;
    return make_compression_instance(std::move(g), std::move(mask), std::move(t),
                                     1 + static_cast<int>(rng() % 3));
  }
}

}  // namespace

TEST_CASE("torso identity when C is everything") {
  Digraph g = from_arcs(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  std::vector<char> mask{0, 1, 0, 0};
  TorsoResult t = torso(g, g.alive(), mask);
  CHECK(arc_set(t.graph, t.s_mask) == arc_set(g, mask));
}

TEST_CASE("torso contracts walks and propagates S") {
  // chain 0 -> 1 -> 2 with the second arc in S, keeping {0, 2}
  Digraph chain = path_graph(3);
  std::vector<char> mask{0, 1};
  TorsoResult t = torso(chain, bits(3, {0, 2}), mask);
  CHECK(t.graph.arc_count() == 1);
  CHECK(has_arc(t, {0, 2}, true));

  // 0 <-> 1 with the return arc in S becomes an S self-loop at 0
  Digraph two = from_arcs(2, {{0, 1}, {1, 0}});
  TorsoResult loop = torso(two, bits(2, {0}), {0, 1});
  CHECK(loop.graph.arc_count() == 1);
  CHECK(has_arc(loop, {0, 0}, true));

  Bitset not_in_graph(3);
  not_in_graph.set(2);
  CHECK_THROWS_AS(torso(two, not_in_graph, {0, 0}), ContractViolation);
}

TEST_CASE("reduce_instance") {
  // t=0 -> 1 -> 2 -> t with (1,2) in S; removing Z={1} leaves (0,2) in S'
  Digraph g = from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
  CompressionInstance inst = make_compression_instance(g, {0, 1, 0}, bits(3, {0}), 1);

  CompressionInstance same = reduce_instance(inst, Bitset(3));
  CHECK(arc_set(same.graph, same.s_mask) == arc_set(g, {0, 1, 0}));

  CompressionInstance reduced = reduce_instance(inst, bits(3, {1}));
  CHECK(reduced.graph.vertex_count() == 2);
  CHECK(arc_set(reduced.graph, reduced.s_mask) ==
        std::set<FlaggedArc>{{0, 2, true}, {2, 0, false}});
  CHECK(inst.old_solution.subset_of(reduced.graph.alive()));

  CHECK_THROWS_AS(reduce_instance(inst, bits(3, {0})), ContractViolation);
}

TEST_CASE("torso preserves separation") {
  std::mt19937_64 rng(1001);
  int checked = 0;
  while (checked < 1000) {
    int n = 3 + static_cast<int>(rng() % 6);
    Digraph g = random_digraph(rng, n, 3 * n);
    Bitset c = random_subset(rng, g.alive(), n);
    if (c.count() < 2) continue;
    std::vector<char> empty_s(static_cast<std::size_t>(g.arc_count()), 0);
    TorsoResult t = torso(g, c, empty_s);
    Bitset w = random_subset(rng, c, 2);
    std::vector<int> inside = (c - w).to_vector();
    if (inside.size() < 2) continue;
    int a = inside[rng() % inside.size()];
    int b = inside[rng() % inside.size()];
    bool in_g = reach_forward(g, g.singleton(a), w).test(b);
    bool in_t = reach_forward(t.graph, t.graph.singleton(a), w).test(b);
    CHECK(in_g == in_t);
    ++checked;
  }
}

TEST_CASE("torso preserves S-closed-walks") {
  std::mt19937_64 rng(1002);
  int checked = 0;
  while (checked < 1000) {
    int n = 3 + static_cast<int>(rng() % 6);
    Digraph g = random_digraph(rng, n, 3 * n);
    std::vector<char> mask = random_s_mask(rng, g, 0.4);
    Bitset c = random_subset(rng, g.alive(), n);
    std::vector<int> inside = c.to_vector();
    if (inside.empty()) continue;
    int v = inside[rng() % inside.size()];
    Bitset w = random_subset(rng, c - g.singleton(v), 2);
    TorsoResult t = torso(g, c, mask);

    DerivedGraph gd = induce(g, g.alive() - w);
    bool in_g = has_s_closed_walk_through(gd.graph, remap_s_mask(mask, gd.arc_origin), v);
    DerivedGraph td = induce(t.graph, t.graph.alive() - w);
    bool in_t = has_s_closed_walk_through(td.graph, remap_s_mask(t.s_mask, td.arc_origin), v);
    CHECK(in_g == in_t);
    ++checked;
  }
}

TEST_CASE("reduction preserves no-instances") {
  std::mt19937_64 rng(1003);
  for (int it = 0; it < 120; ++it) {
    CompressionInstance inst = random_compression_fixture(rng, 5 + static_cast<int>(rng() % 2));
    Bitset z = random_subset(rng, inst.graph.alive() - inst.old_solution, 2);
    CompressionInstance reduced = reduce_instance(inst, z);
    if (!compression_brute_yes(inst)) CHECK_FALSE(compression_brute_yes(reduced));
  }
}

TEST_CASE("torso graph contains the induced subgraph") {
  std::mt19937_64 rng(1004);
  for (int it = 0; it < 200; ++it) {
    int n = 3 + static_cast<int>(rng() % 6);
    Digraph g = random_digraph(rng, n, 3 * n);
    std::vector<char> mask = random_s_mask(rng, g, 0.3);
    Bitset c = random_subset(rng, g.alive(), n);
    TorsoResult t = torso(g, c, mask);
    for (int i = 0; i < g.arc_count(); ++i) {
      const Arc& a = g.arc(i);
      if (!c.test(a.tail) || !c.test(a.head)) continue;
      CHECK(has_arc(t, a, mask[static_cast<std::size_t>(i)] != 0));
    }
  }
}
