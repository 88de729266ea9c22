#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "sdfvs/oracle.hpp"
#include "sdfvs/solver.hpp"

using namespace sdfvs;
using namespace sdfvs::testing;

TEST_CASE("brute_force_solve") {
  EdgeInstance c2{cycle_graph(2), {1, 0}, 1};
  std::optional<Solution> s = brute_force_solve(c2);
  REQUIRE(s.has_value());
  CHECK(s->deleted == std::vector<int>{0});  // lexicographically least minimum

  EdgeInstance p4{path_graph(4), {1, 1, 1}, 0};
  s = brute_force_solve(p4);
  REQUIRE(s.has_value());
  CHECK(s->deleted.empty());

  EdgeInstance k4 = all_arcs_instance(bidirected_clique(4), 2);
  CHECK_FALSE(brute_force_solve(k4).has_value());

  EdgeInstance big = all_arcs_instance(bidirected_clique(12), 2);
  CHECK_THROWS_AS(brute_force_solve(big), OracleBudgetError);
}

TEST_CASE("brute_force_important_separators") {
  Digraph p4 = path_graph(4);
  SeparatorList r = brute_force_important_separators(p4, bits(4, {0}), bits(4, {3}), 2);
  REQUIRE(r.items.size() == 1);
  CHECK(r.items[0].vertices == bits(4, {2}));

  Digraph d4 = diamond();
  r = brute_force_important_separators(d4, bits(4, {0}), bits(4, {3}), 2);
  REQUIRE(r.items.size() == 1);
  CHECK(r.items[0].vertices == bits(4, {1, 2}));

  Digraph shortcut = from_arcs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}});
  CHECK(brute_force_important_separators(shortcut, bits(4, {0}), bits(4, {3}), 2).inseparable);
}

TEST_CASE("brute_force_critical corner cases") {
  Digraph g = from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(brute_force_critical(g, {0, 1, 0}, bits(3, {0}), 1) == bits(3, {2}));
  CHECK(brute_force_critical(g, {0, 0, 0}, bits(3, {0}), 2).none());
  CHECK(brute_force_critical(g, {0, 1, 0}, bits(3, {0}), 0).none());
}

TEST_CASE("oracle answers are invariant under relabeling") {
  std::mt19937_64 rng(8080);
  for (int it = 0; it < 40; ++it) {
    int n = 4 + static_cast<int>(rng() % 4);
    Digraph g = random_digraph(rng, n, 3 * n);
    std::vector<char> mask = random_s_mask(rng, g, 0.4);
    int k = static_cast<int>(rng() % 3);

    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[static_cast<std::size_t>(i)],
                perm[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1))]);

    std::vector<Arc> relabeled;
    for (const Arc& a : g.arcs())
      relabeled.push_back({perm[static_cast<std::size_t>(a.tail)],
                           perm[static_cast<std::size_t>(a.head)]});
    Digraph h = Digraph::build(n, relabeled, Bitset(static_cast<std::size_t>(n)));

    EdgeInstance ig{g, mask, k}, ih{h, mask, k};
    std::optional<Solution> sg = brute_force_solve(ig);
    std::optional<Solution> sh = brute_force_solve(ih);
    CHECK(sg.has_value() == sh.has_value());
    if (sg && sh) CHECK(sg->deleted.size() == sh->deleted.size());
  }
}

TEST_CASE("oracle and solver presence coincide within budget") {
  std::mt19937_64 rng(8081);
  SolverConfig cfg;
  cfg.sampling.mode = SamplingMode::exhaustive_p;
  for (int it = 0; it < 40; ++it) {
    int n = 4 + static_cast<int>(rng() % 4);
    Digraph g = random_digraph(rng, n, 3 * n);
    EdgeInstance inst{g, random_s_mask(rng, g, 0.4), static_cast<int>(rng() % 3)};
    CHECK(brute_force_solve(inst).has_value() == solve(inst, cfg).solution.has_value());
  }
}
