#include "icl/families.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <functional>
#include <sstream>

#include "icl/errors.hpp"

namespace icl {

void UniversalParams::validate() const {
  if (!(r >= 1 && r < k && k <= m && k >= 2)) {
    throw InvalidInput("universal parameters need 1 <= r < k <= m, got r=" + std::to_string(r) +
                       " m=" + std::to_string(m) + " k=" + std::to_string(k));
  }
}

Digraph odd_even_tournament(std::size_t n) {
  if (n < 2) throw InvalidInput("odd_even_tournament: n must be at least 2");
  Digraph g(n);
  // Index i carries label i + 1.
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = a + 1; b <= n; ++b) {
      if (a % 2 == b % 2)
        g.add_edge(a - 1, b - 1);
      else
        g.add_edge(b - 1, a - 1);
    }
  }
  return g;
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt out;
  if (k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt universal_vertex_count(const UniversalParams& params) {
  params.validate();
  return binomial(params.m, params.r) * binomial(params.m - params.r, params.k - params.r);
}

namespace {

void for_each_subset(const std::vector<std::size_t>& pool, std::size_t size,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (chosen.size() == size) {
      fn(chosen);
      return;
    }
    for (std::size_t i = from; i + (size - chosen.size()) <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

bool subset_of(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

std::vector<UniversalVertex> universal_vertices(const UniversalParams& params, std::size_t cap) {
  const BigInt count = universal_vertex_count(params);
  if (count > cap) throw CapExceeded("universal_digraph", count.fits_ulong_p() ? count.get_ui() : ~0UL, cap);
  std::vector<std::size_t> ground(params.m);
  for (std::size_t i = 0; i < params.m; ++i) ground[i] = i;
  std::vector<UniversalVertex> vertices;
  for_each_subset(ground, params.r, [&](const std::vector<std::size_t>& x) {
    std::vector<std::size_t> rest;
    std::set_difference(ground.begin(), ground.end(), x.begin(), x.end(), std::back_inserter(rest));
    for_each_subset(rest, params.k - params.r,
                    [&](const std::vector<std::size_t>& a) { vertices.push_back({x, a}); });
  });
  return vertices;
}

Digraph universal_digraph(const UniversalParams& params, std::size_t cap) {
  const auto vertices = universal_vertices(params, cap);
  Digraph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j)
      if (i != j && subset_of(vertices[j].x, vertices[i].a)) g.add_edge(i, j);
  return g;
}

AlphaValue universal_alpha(const UniversalParams& params) {
  params.validate();
  AlphaValue best;
  best.value = 0;
  for (std::size_t p = 1; p + params.k <= params.m + 1; ++p) {
    BigInt value = BigInt(static_cast<unsigned long>(p)) * binomial(params.m - p, params.k - 1);
    if (value > best.value) {
      best.value = value;
      best.argmax_p = p;
    }
  }
  if (params.r > 1) {
    best.value *= binomial(params.k - 1, params.r - 1);
    best.exact = false;
  }
  return best;
}

double multiplicative_bound() { return 1.25 * std::exp(2.0); }

RatioReport universal_ratio(const UniversalParams& params) {
  RatioReport report;
  report.params = params;
  report.num_vertices = universal_vertex_count(params);
  report.alpha = universal_alpha(params);
  report.chi_f = Rational(report.num_vertices, report.alpha.value);
  report.chi_f.canonicalize();
  report.chi_local = params.k;
  report.ratio = report.chi_f / Rational(params.k, params.r);
  report.ratio.canonicalize();
  report.bound_ok = report.ratio.get_d() <= multiplicative_bound();
  return report;
}

SweepResult ratio_sweep(std::size_t m_lo, std::size_t m_hi, std::size_t k_lo, std::size_t k_hi,
                        std::size_t r) {
  SweepResult sweep;
  for (std::size_t k = std::max<std::size_t>(k_lo, 2); k <= k_hi; ++k) {
    for (std::size_t m = std::max(m_lo, k); m <= m_hi; ++m) {
      if (r >= k) continue;
      sweep.rows.push_back(universal_ratio({r, m, k}));
      const auto& row = sweep.rows.back();
      sweep.all_ok = sweep.all_ok && row.bound_ok;
      if (row.ratio > sweep.rows[sweep.max_index].ratio) sweep.max_index = sweep.rows.size() - 1;
    }
  }
  return sweep;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::ostringstream out;
  out << "r,m,k,num_vertices,alpha,chi_f,ratio,bound_ok\n";
  for (const auto& row : sweep.rows) {
    out << row.params.r << ',' << row.params.m << ',' << row.params.k << ','
        << row.num_vertices.get_str() << ',' << row.alpha.value.get_str() << ','
        << to_string(row.chi_f) << ',' << to_decimal(row.ratio, 12) << ','
        << (row.bound_ok ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace icl
