#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>

#include "icl/coloring.hpp"
#include "icl/errors.hpp"
#include "support.hpp"

using namespace icl;

namespace {

Digraph bidirected_cycle(std::size_t n) { return bidirected(cycle_graph(n)); }

// min over multisets of independent sets covering each vertex exactly r times of the
// largest number of sets (with multiplicity) meeting a closed out-neighborhood.
std::size_t brute_r_fold(const Digraph& g, std::size_t r) {
  const auto sets = test::brute_independent_sets(shadow(g));
  const std::size_t n = g.size();
  std::vector<std::uint64_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (Vertex w : g.out(v)) closed[v] |= std::uint64_t{1} << w;
  }
  std::size_t best = r * n + 1;
  std::vector<std::size_t> cover(n, 0);
  std::vector<std::size_t> load(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (*std::max_element(load.begin(), load.end()) >= best) return;
    if (i == sets.size()) {
      if (std::all_of(cover.begin(), cover.end(), [&](std::size_t c) { return c == r; }))
        best = *std::max_element(load.begin(), load.end());
      return;
    }
    rec(i + 1);
    std::size_t added = 0;
    for (;;) {
      bool ok = true;
      for (Vertex v = 0; v < n; ++v)
        if ((sets[i] >> v & 1) && cover[v] == r) ok = false;
      if (!ok) break;
      ++added;
      for (Vertex v = 0; v < n; ++v) {
        if (sets[i] >> v & 1) ++cover[v];
        if (sets[i] & closed[v]) ++load[v];
      }
      rec(i + 1);
    }
    for (; added > 0; --added)
      for (Vertex v = 0; v < n; ++v) {
        if (sets[i] >> v & 1) --cover[v];
        if (sets[i] & closed[v]) --load[v];
      }
  };
  rec(0);
  return best;
}

}  // namespace

TEST_CASE("lex order on vertex sets") {
  auto m = [](std::vector<Vertex> v) { return vertices_to_mask(v); };
  CHECK(lex_less(m({0}), m({0, 1})));
  CHECK(lex_less(m({0, 1}), m({0, 2})));
  CHECK(lex_less(m({0, 2}), m({1})));
  CHECK_FALSE(lex_less(m({1}), m({1})));
  CHECK(lex_less(m({0, 5, 9}), m({0, 6})));
}

TEST_CASE("enumerate_independent_sets") {
  const auto c5 = enumerate_independent_sets(cycle_graph(5), true);
  CHECK(c5.sets.size() == 5);
  for (auto s : c5.sets) CHECK(std::popcount(s) == 2);
  CHECK(c5.sets.size() == test::brute_maximal_independent_sets(cycle_graph(5)).size());

  const auto k3 = enumerate_independent_sets(complete_graph(3), true);
  CHECK(k3.sets == std::vector<VertexMask>{1, 2, 4});
  CHECK(enumerate_independent_sets(UndirectedGraph(3), true).sets == std::vector<VertexMask>{7});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = test::random_graph(1 + rng() % 9, 0.4, rng);
    auto brute_all = test::brute_independent_sets(g);
    auto brute_max = test::brute_maximal_independent_sets(g);
    std::sort(brute_all.begin(), brute_all.end(), lex_less);
    std::sort(brute_max.begin(), brute_max.end(), lex_less);
    CHECK(enumerate_independent_sets(g, false).sets == brute_all);
    CHECK(enumerate_independent_sets(g, true).sets == brute_max);
  }
  CHECK_THROWS_AS(enumerate_independent_sets(UndirectedGraph(21), true), CapExceeded);
}

TEST_CASE("chromatic_number") {
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  for (std::size_t n = 1; n <= 7; ++n) CHECK(chromatic_number(complete_graph(n)) == n);
  CHECK(chromatic_number(complete_graph(3)) == 3);
  CHECK(chromatic_number(UndirectedGraph(0)) == 0);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = test::random_graph(1 + rng() % 8, 0.5, rng);
    const auto c = optimal_coloring(g);
    CHECK(is_proper(c));
    CHECK(c.num_colors == test::brute_chromatic(g));
  }
  CHECK_THROWS_AS(chromatic_number(UndirectedGraph(21)), CapExceeded);
}

TEST_CASE("clique and independence numbers") {
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(independence_number(cycle_graph(5)) == 2);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = test::random_graph(1 + rng() % 14, 0.4, rng);
    CHECK(independence_number(g) == test::brute_alpha(g));
    CHECK(clique_number(g) == test::brute_alpha(complement(g)));
  }
}

TEST_CASE("fractional_chromatic") {
  // Feasible: every maximal set of C5 at 1/2. Lower bound: five vertices to cover and
  // each independent set covers at most two, so the value is at least 5/2.
  const auto c5 = fractional_chromatic(cycle_graph(5));
  CHECK(c5.objective == Rational(5, 2));
  CHECK(Rational(5, static_cast<long>(test::brute_alpha(cycle_graph(5)))) == c5.objective);
  CHECK(is_feasible(c5));
  for (std::size_t n = 1; n <= 6; ++n) CHECK(fractional_chromatic(complete_graph(n)).objective == n);
  CHECK(fractional_chromatic(UndirectedGraph(4)).objective == 1);
}

TEST_CASE("local_chromatic") {
  const auto cyc = local_chromatic(directed_cycle(3));
  CHECK(cyc.local_value == 2);
  CHECK(cyc.base.num_colors == 3);
  CHECK(test::brute_local_chromatic(directed_cycle(3)) == 2);
  CHECK(local_chromatic(bidirected_cycle(5)).local_value == 3);
  CHECK(local_chromatic(Digraph(4)).local_value == 1);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 80; ++trial) {
    const Digraph g = test::random_digraph(1 + rng() % 7, 0.1 * static_cast<double>(1 + rng() % 8), rng);
    const auto lc = local_chromatic(g);
    CHECK(is_proper(lc.base));
    CHECK(lc.base.graph == shadow(g));
    CHECK(lc.local_value == local_value_of(g, lc.base.color_of));
    CHECK(lc.local_value <= lc.base.num_colors);
    CHECK(lc.local_value == test::brute_local_chromatic(g));
  }
}

TEST_CASE("local_chromatic can need more colors than the chromatic number") {
  // Interference graph of the odd/even type on K_6: every coloring uses 6 colors, yet
  // each closed out-neighborhood sees at most 4.
  Digraph g(6);
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = a + 1; b <= 6; ++b) {
      if (a % 2 == b % 2) g.add_edge(a - 1, b - 1);
      else g.add_edge(b - 1, a - 1);
    }
  CHECK(local_chromatic(g).local_value == 4);
  CHECK(test::brute_local_chromatic(g) == 4);
}

TEST_CASE("fractional_local_chromatic") {
  const auto c5 = fractional_local_chromatic(bidirected_cycle(5));
  CHECK(c5.objective == Rational(5, 2));
  CHECK(c5.exact);
  CHECK(is_feasible(c5));
  CHECK(fractional_local_chromatic(Digraph(3)).objective == 1);
  // Each singleton needs weight 1 and every N+(v) = {v, v+1} meets two of them.
  CHECK(fractional_local_chromatic(directed_cycle(3)).objective == 2);
}

TEST_CASE("maximal-only fallback above the cap is flagged") {
  SolverCaps caps;
  caps.fractional_local = 4;
  const auto sol = fractional_local_chromatic(bidirected_cycle(5), caps);
  CHECK_FALSE(sol.exact);
  CHECK(sol.family.maximal_only);
  CHECK(is_feasible(sol));
  CHECK(sol.objective >= Rational(5, 2));
}

TEST_CASE("r_fold_local_chromatic") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const Digraph g = test::random_digraph(1 + rng() % 6, 0.4, rng);
    const auto one = r_fold_local_chromatic(g, 1);
    CHECK(one.local_value == local_chromatic(g).local_value);
    CHECK(is_valid(one));
  }
  const auto c5 = r_fold_local_chromatic(bidirected_cycle(5), 2);
  CHECK(c5.local_value == 5);
  CHECK(brute_r_fold(bidirected_cycle(5), 2) == 5);
  CHECK(is_valid(c5));
  for (std::size_t r = 1; r <= 4; ++r) CHECK(r_fold_local_chromatic(Digraph(5), r).local_value == r);
  CHECK(brute_r_fold(directed_cycle(3), 2) == r_fold_local_chromatic(directed_cycle(3), 2).local_value);

  for (int trial = 0; trial < 25; ++trial) {
    const Digraph g = test::random_digraph(2 + rng() % 3, 0.5, rng);
    for (std::size_t r = 2; r <= 3; ++r) {
      const auto c = r_fold_local_chromatic(g, r);
      CHECK(is_valid(c));
      CHECK(c.local_value == brute_r_fold(g, r));
    }
  }
  CHECK_THROWS_AS(r_fold_local_chromatic(Digraph(11), 1), CapExceeded);
  CHECK_THROWS_AS(r_fold_local_chromatic(Digraph(3), 5), CapExceeded);
}

TEST_CASE("minrank2") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(minrank2(bidirected(complete_graph(n))) == 1);
    CHECK(minrank2(Digraph(n)) == n);
  }
  CHECK(minrank2(bidirected_cycle(5)) == 3);
  CHECK_THROWS_AS(minrank2(Digraph(6)), CapExceeded);
}

TEST_CASE("sandwich chain and multiplicative bound on random interference graphs") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph g = test::random_digraph(1 + rng() % 8, 0.1 * static_cast<double>(1 + rng() % 8), rng);
    const auto fl = fractional_local_chromatic(g).objective;
    const auto f = fractional_chromatic(shadow(g)).objective;
    const auto l = local_chromatic(g).local_value;
    const auto chi = chromatic_number(shadow(g));
    CHECK(fl <= f);
    CHECK(fl <= Rational(l));
    CHECK(l <= chi);
    CHECK(Rational(f / Rational(l)).get_d() <= 1.25 * std::exp(2.0));
    for (std::size_t r = 1; r <= 2 && g.size() <= 6; ++r)
      CHECK(Rational(r_fold_local_chromatic(g, r).local_value, r) >= fl);
  }
}

TEST_CASE("bidirected graphs: fractional local equals fractional chromatic") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const auto u = test::random_graph(1 + rng() % 8, 0.5, rng);
    CHECK(fractional_local_chromatic(bidirected(u)).objective == fractional_chromatic(u).objective);
  }
}
