#pragma once

// Test-only helpers: random instances and brute-force oracles that share no code
// with the solvers they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "icl/graph.hpp"
#include "icl/rational.hpp"

namespace icl::test {

inline Digraph random_digraph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j && coin(rng)) g.add_edge(i, j);
  return g;
}

inline UndirectedGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  UndirectedGraph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

/// Calls fn on every restricted-growth string of length n (each set partition once).
inline void for_each_partition(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> a(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      fn(a);
      return;
    }
    for (std::size_t c = 0; c <= blocks; ++c) {
      a[i] = c;
      rec(i + 1, std::max(blocks, c + 1));
    }
  };
  if (n == 0) {
    fn(a);
    return;
  }
  a[0] = 0;
  rec(1, 1);
}

inline bool proper(const UndirectedGraph& g, const std::vector<std::size_t>& c) {
  for (const auto& [a, b] : g.edges())
    if (c[a] == c[b]) return false;
  return true;
}

inline std::size_t brute_chromatic(const UndirectedGraph& g) {
  std::size_t best = g.size();
  for_each_partition(g.size(), [&](const std::vector<std::size_t>& c) {
    if (!proper(g, c)) return;
    std::size_t k = c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    best = std::min(best, k);
  });
  return best;
}

inline std::size_t local_value(const Digraph& g, const std::vector<std::size_t>& c) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    std::set<std::size_t> seen{c[v]};
    for (const auto& [a, b] : g.edges())
      if (a == v) seen.insert(c[b]);
    best = std::max(best, seen.size());
  }
  return best;
}

/// Minimum over all proper colorings (any number of colors) of the local value.
inline std::size_t brute_local_chromatic(const Digraph& g) {
  const UndirectedGraph s = shadow(g);
  std::size_t best = g.size();
  for_each_partition(g.size(), [&](const std::vector<std::size_t>& c) {
    if (proper(s, c)) best = std::min(best, local_value(g, c));
  });
  return best;
}

/// Every independent set (nonempty) by subset enumeration.
inline std::vector<std::uint64_t> brute_independent_sets(const UndirectedGraph& g) {
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << g.size();
  for (std::uint64_t s = 1; s < limit; ++s) {
    bool ok = true;
    for (const auto& [a, b] : g.edges())
      if ((s >> a & 1) && (s >> b & 1)) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

inline std::vector<std::uint64_t> brute_maximal_independent_sets(const UndirectedGraph& g) {
  const auto all = brute_independent_sets(g);
  const std::set<std::uint64_t> lookup(all.begin(), all.end());
  std::vector<std::uint64_t> out;
  for (auto s : all) {
    bool maximal = true;
    for (Vertex v = 0; v < g.size(); ++v)
      if (!(s >> v & 1) && lookup.count(s | (std::uint64_t{1} << v))) maximal = false;
    if (maximal) out.push_back(s);
  }
  return out;
}

/// Include/exclude search with the trivial |current| + |candidates| bound.
inline std::size_t brute_alpha(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : g.edges()) adj[a][b] = adj[b][a] = true;
  std::size_t best = 0;
  std::function<void(std::vector<Vertex>, std::size_t)> rec = [&](std::vector<Vertex> cand, std::size_t size) {
    if (size + cand.size() <= best) return;
    if (cand.empty()) {
      best = size;
      return;
    }
    const Vertex v = cand.front();
    std::vector<Vertex> rest(cand.begin() + 1, cand.end());
    std::vector<Vertex> with;
    for (Vertex w : rest)
      if (!adj[v][w]) with.push_back(w);
    rec(with, size + 1);
    rec(rest, size);
  };
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  rec(all, 0);
  return best;
}

}  // namespace icl::test
