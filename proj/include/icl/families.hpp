#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "icl/graph.hpp"
#include "icl/rational.hpp"

namespace icl {

/// Parameters of the universal digraphs: vertices (X, A) with X, A disjoint subsets of
/// [m], |X| = r, |A| = k - r. Edge (X, A) -> (Y, B) iff Y is a subset of A.
struct UniversalParams {
  std::size_t r = 1;
  std::size_t m = 2;
  std::size_t k = 2;

  /// Throws InvalidInput unless 1 <= r < k <= m.
  void validate() const;
};

/// Complete graph on vertices labelled 1..n (stored as label - 1), oriented so that odd
/// labels point to larger odd labels, even labels to larger even labels, and a mixed pair
/// points from the larger label to the smaller.
Digraph odd_even_tournament(std::size_t n);

BigInt binomial(std::size_t n, std::size_t k);

BigInt universal_vertex_count(const UniversalParams& params);

/// A vertex (X, A) of the universal digraph, both as sorted 0-based element lists.
struct UniversalVertex {
  std::vector<std::size_t> x;
  std::vector<std::size_t> a;
};

/// Vertices in canonical (sorted (X, A)) order.
std::vector<UniversalVertex> universal_vertices(const UniversalParams& params,
                                                std::size_t cap = 100000);

Digraph universal_digraph(const UniversalParams& params, std::size_t cap = 100000);

struct AlphaValue {
  BigInt value;
  std::size_t argmax_p = 0;  // smallest maximizing p
  bool exact = true;         // false for r > 1, where only a lower bound is known
};

/// r = 1: max over 1 <= p <= m-k+1 of p * C(m-p, k-1).
/// r > 1: that maximum times C(k-1, r-1), a lower bound on the independence number.
AlphaValue universal_alpha(const UniversalParams& params);

struct RatioReport {
  UniversalParams params;
  BigInt num_vertices;
  AlphaValue alpha;
  Rational chi_f;        // |V| / alpha; an upper bound when !alpha.exact
  std::size_t chi_local = 0;  // k
  Rational ratio;        // chi_f / (k / r)
  bool bound_ok = false; // ratio <= (5/4) e^2
};

/// (5/4) e^2.
double multiplicative_bound();

RatioReport universal_ratio(const UniversalParams& params);

struct SweepResult {
  std::vector<RatioReport> rows;  // ordered by (k, m)
  std::size_t max_index = 0;      // row with the largest ratio (first on ties)
  bool all_ok = true;
};

/// For every k in [k_lo, k_hi] and m in [m_lo, m_hi] (m >= k enforced by skipping).
SweepResult ratio_sweep(std::size_t m_lo, std::size_t m_hi, std::size_t k_lo, std::size_t k_hi,
                        std::size_t r = 1);

/// Columns r,m,k,num_vertices,alpha,chi_f,ratio,bound_ok.
std::string sweep_csv(const SweepResult& sweep);

}  // namespace icl
