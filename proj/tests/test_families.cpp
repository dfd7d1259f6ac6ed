#include <doctest.h>

#include <cmath>

#include "icl/coloring.hpp"
#include "icl/errors.hpp"
#include "icl/families.hpp"
#include "icl/index_code.hpp"
#include "support.hpp"

using namespace icl;

namespace {

// p * C(m - p, k - 1) maximized over p, with plain 64-bit arithmetic.
std::uint64_t alpha_formula(std::uint64_t m, std::uint64_t k) {
  auto choose = [](std::uint64_t n, std::uint64_t r) {
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
    return c;
  };
  std::uint64_t best = 0;
  for (std::uint64_t p = 1; p + k <= m + 1; ++p) best = std::max(best, p * choose(m - p, k - 1));
  return best;
}

}  // namespace

TEST_CASE("odd_even_tournament") {
  const auto t2 = odd_even_tournament(2);
  CHECK(t2.edges() == std::set<Edge>{{1, 0}});

  for (std::size_t n = 2; n <= 12; ++n) {
    const auto t = odd_even_tournament(n);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) CHECK(t.has_edge(a, b) != t.has_edge(b, a));
  }
  for (std::size_t n = 2; n <= 50; ++n) {
    const auto t = odd_even_tournament(n);
    for (Vertex v = 0; v < n; ++v) CHECK(t.out(v).size() + 1 <= n / 2 + 1);
  }
  // labels 1..n: 1 -> 3, 2 -> 4, 3 -> 2, 4 -> 1
  const auto t4 = odd_even_tournament(4);
  CHECK(t4.has_edge(0, 2));
  CHECK(t4.has_edge(1, 3));
  CHECK(t4.has_edge(2, 1));
  CHECK(t4.has_edge(3, 0));
  CHECK(t4.has_edge(1, 0));
  CHECK(t4.has_edge(3, 2));
}

TEST_CASE("odd_even_tournament: additive gap") {
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto t = odd_even_tournament(n);
    CHECK(local_chromatic(t).local_value <= n / 2 + 1);
    CHECK(fractional_chromatic(shadow(t)).objective == n);
    const auto side = directed_complement(t);
    const auto code = construct_scalar_code(side);
    CHECK(verify(code.code, side).valid);
    CHECK(code.code.broadcast_rate() <= Rational(n / 2 + 1));
  }
}

TEST_CASE("universal digraphs: structure") {
  const UniversalParams p32{1, 3, 2};
  const auto vs = universal_vertices(p32);
  REQUIRE(vs.size() == 6);
  const auto g = universal_digraph(p32);
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex w = 0; w < 6; ++w)
      if (u != w) CHECK(g.has_edge(u, w) == (vs[w].x[0] == vs[u].a[0]));
  CHECK(universal_vertex_count({2, 5, 3}) == 30);
  CHECK(universal_digraph({2, 5, 3}).size() == 30);

  // Shadow edges: Y in A or X in B.
  const UniversalParams p{2, 5, 4};
  const auto v2 = universal_vertices(p);
  const auto sh = shadow(universal_digraph(p));
  auto subset = [](const std::vector<std::size_t>& s, const std::vector<std::size_t>& t) {
    return std::includes(t.begin(), t.end(), s.begin(), s.end());
  };
  for (Vertex u = 0; u < v2.size(); ++u)
    for (Vertex w = u + 1; w < v2.size(); ++w)
      CHECK(sh.adjacent(u, w) == (subset(v2[w].x, v2[u].a) || subset(v2[u].x, v2[w].a)));

  CHECK_THROWS_AS(UniversalParams({2, 5, 2}).validate(), InvalidInput);
  CHECK_THROWS_AS(UniversalParams({1, 3, 4}).validate(), InvalidInput);
  CHECK_THROWS_AS(universal_digraph({1, 30, 5}), CapExceeded);
}

TEST_CASE("universal digraphs: local chromatic number equals k") {
  CHECK(local_chromatic(universal_digraph({1, 4, 2})).local_value == 2);
  CHECK(local_chromatic(universal_digraph({1, 3, 2})).local_value == 2);
  CHECK(local_chromatic(universal_digraph({1, 5, 2})).local_value == 2);
  CHECK(local_chromatic(universal_digraph({1, 4, 3})).local_value == 3);
  CHECK(local_chromatic(universal_digraph({1, 5, 4})).local_value == 4);
}

TEST_CASE("universal_alpha") {
  CHECK(universal_alpha({1, 4, 2}).value == 4);
  CHECK(test::brute_alpha(shadow(universal_digraph({1, 4, 2}))) == 4);
  for (std::size_t k = 2; k <= 7; ++k) CHECK(universal_alpha({1, k, k}).value == 1);
  for (std::size_t m = 2; m <= 8; ++m)
    for (std::size_t k = 2; k <= m; ++k) {
      const UniversalParams p{1, m, k};
      CHECK(universal_alpha(p).value == alpha_formula(m, k));
      if (universal_vertex_count(p) <= 30)
        CHECK(universal_alpha(p).value == test::brute_alpha(shadow(universal_digraph(p))));
    }
  const auto a = universal_alpha({1, 289, 9});
  CHECK(a.exact);
  BigInt best = 0;
  for (std::size_t pp = 1; pp <= 281; ++pp) best = std::max<BigInt>(best, BigInt(pp) * binomial(289 - pp, 8));
  CHECK(a.value == best);
  CHECK(a.value == BigInt(a.argmax_p) * binomial(289 - a.argmax_p, 8));
  CHECK_FALSE(universal_alpha({2, 6, 4}).exact);
  CHECK(universal_alpha({2, 6, 4}).value == universal_alpha({1, 6, 4}).value * 3);
}

TEST_CASE("universal_ratio") {
  const auto r42 = universal_ratio({1, 4, 2});
  CHECK(r42.chi_f == 3);
  CHECK(r42.ratio == Rational(3, 2));
  CHECK(r42.num_vertices == 12);
  for (std::size_t k = 2; k <= 9; ++k) CHECK(universal_ratio({1, k, k}).ratio == 1);

  // chi_f = |V| / alpha matches the LP on small shadows.
  for (const UniversalParams p : {UniversalParams{1, 4, 2}, UniversalParams{1, 5, 2}, UniversalParams{1, 4, 3}}) {
    CHECK(fractional_chromatic(shadow(universal_digraph(p))).objective == universal_ratio(p).chi_f);
  }

  const double r281 = universal_ratio({1, 281, 9}).ratio.get_d();
  const double r289 = universal_ratio({1, 289, 9}).ratio.get_d();
  CHECK(std::abs(r281 - 2.5244) <= 1e-4);
  CHECK(std::abs(r289 - 2.5244) > 1e-4);
  CHECK(multiplicative_bound() == doctest::Approx(9.23632012366).epsilon(1e-11));
}

TEST_CASE("ratio_sweep") {
  const auto s = ratio_sweep(100, 400, 9, 9);
  CHECK(s.rows.size() == 301);
  CHECK(s.all_ok);
  // Oracle: the same ratio m C(m-1,k-1) / (k max_p p C(m-p,k-1)) in floating point.
  std::size_t oracle_m = 0;
  double oracle_best = 0;
  for (std::size_t m = 100; m <= 400; ++m) {
    double best_log = -1e300;
    for (std::size_t p = 1; p + 9 <= m + 1; ++p) {
      const double v = std::log(double(p)) + std::lgamma(double(m - p + 1)) - std::lgamma(9.0) - std::lgamma(double(m - p - 7));
      best_log = std::max(best_log, v);
    }
    const double ratio = std::exp(std::log(double(m)) + std::lgamma(double(m)) - std::lgamma(9.0) -
                                  std::lgamma(double(m - 8)) - std::log(9.0) - best_log);
    if (ratio > oracle_best + 1e-12) {
      oracle_best = ratio;
      oracle_m = m;
    }
  }
  CHECK(s.rows[s.max_index].params.m == oracle_m);
  CHECK(s.rows[s.max_index].ratio.get_d() == doctest::Approx(oracle_best).epsilon(1e-9));
  const auto single = ratio_sweep(289, 289, 9, 9);
  CHECK(single.rows.size() == 1);
  CHECK(single.rows[0].ratio == universal_ratio({1, 289, 9}).ratio);

  const auto k2 = ratio_sweep(2, 8, 2, 2);
  for (const auto& row : k2.rows) {
    CHECK(row.ratio <= Rational(row.params.m, row.params.k));
    CHECK(row.ratio <= 4);
  }

  const auto csv = sweep_csv(ratio_sweep(4, 5, 2, 2));
  CHECK(csv.rfind("r,m,k,num_vertices,alpha,chi_f,ratio,bound_ok\n", 0) == 0);
  CHECK(csv.find("1,4,2,12,4,3,1.50000000000,true") != std::string::npos);
}
