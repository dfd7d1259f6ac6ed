#include <algorithm>
#include <bit>
#include <numeric>

#include "bitgraph.hpp"
#include "icl/coloring.hpp"
#include "icl/errors.hpp"

namespace icl {

std::vector<Vertex> mask_to_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

VertexMask vertices_to_mask(const std::vector<Vertex>& vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) m |= VertexMask{1} << v;
  return m;
}

bool lex_less(VertexMask a, VertexMask b) {
  const VertexMask diff = a ^ b;
  if (diff == 0) return false;
  const VertexMask low = diff & -diff;
  const VertexMask above = ~((low << 1) - 1);
  const bool a_has = (a & low) != 0;
  const VertexMask other_rest = (a_has ? b : a) & above;
  // The set holding `low` is smaller unless the other one ends before it.
  return a_has ? other_rest != 0 : other_rest == 0;
}

SolverCaps SolverCaps::uniform(std::size_t n) {
  SolverCaps caps;
  caps.enumerate = n;
  caps.fractional_local = n;
  caps.rfold = n;
  return caps;
}

namespace detail {

BitGraph::BitGraph(const UndirectedGraph& g) : n(g.size()), adj(g.size(), 0) {
  if (n > kMaxSolverVertices) throw CapExceeded("bit-parallel solver", n, kMaxSolverVertices);
  for (const auto& [a, b] : g.edges()) {
    adj[a] |= VertexMask{1} << b;
    adj[b] |= VertexMask{1} << a;
  }
}

VertexMask BitGraph::all() const { return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

namespace {

// Greedy sequential coloring of `cand` for the clique bound (Tomita MCQ style).
void color_sort(const BitGraph& g, VertexMask cand, std::vector<Vertex>& order,
                std::vector<std::size_t>& bounds) {
  order.clear();
  bounds.clear();
  std::size_t color = 0;
  while (cand) {
    ++color;
    VertexMask q = cand;
    while (q) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(q));
      q &= ~(VertexMask{1} << v);
      q &= ~g.adj[v];
      cand &= ~(VertexMask{1} << v);
      order.push_back(v);
      bounds.push_back(color);
    }
  }
}

void expand(const BitGraph& g, VertexMask current, std::size_t size, VertexMask cand,
            VertexMask& best, std::size_t& best_size) {
  std::vector<Vertex> order;
  std::vector<std::size_t> bounds;
  color_sort(g, cand, order, bounds);
  for (std::size_t i = order.size(); i-- > 0;) {
    if (size + bounds[i] <= best_size) return;
    const Vertex v = order[i];
    const VertexMask next = current | (VertexMask{1} << v);
    const VertexMask next_cand = cand & g.adj[v];
    if (next_cand == 0) {
      if (size + 1 > best_size) {
        best_size = size + 1;
        best = next;
      }
    } else {
      expand(g, next, size + 1, next_cand, best, best_size);
    }
    cand &= ~(VertexMask{1} << v);
  }
}

}  // namespace

VertexMask maximum_clique(const BitGraph& g, VertexMask within) {
  VertexMask best = 0;
  std::size_t best_size = 0;
  if (within) expand(g, 0, 0, within, best, best_size);
  return best;
}

BitGraph BitGraph::complement() const {
  BitGraph c;
  c.n = n;
  c.adj.resize(n);
  for (std::size_t v = 0; v < n; ++v) c.adj[v] = all() & ~adj[v] & ~(VertexMask{1} << v);
  return c;
}

}  // namespace detail

namespace {

void all_independent(const detail::BitGraph& g, VertexMask current, VertexMask cand,
                     std::vector<VertexMask>& out) {
  while (cand) {
    const Vertex v = static_cast<Vertex>(std::countr_zero(cand));
    cand &= ~(VertexMask{1} << v);
    const VertexMask next = current | (VertexMask{1} << v);
    out.push_back(next);
    all_independent(g, next, cand & ~g.adj[v], out);
  }
}

// Bron-Kerbosch with pivoting, phrased for independent sets.
void maximal_independent(const detail::BitGraph& g, VertexMask current, VertexMask cand,
                         VertexMask excluded, std::vector<VertexMask>& out) {
  if (cand == 0) {
    if (excluded == 0) out.push_back(current);
    return;
  }
  Vertex pivot = 0;
  int best = -1;
  for (VertexMask q = cand | excluded; q; q &= q - 1) {
    const Vertex u = static_cast<Vertex>(std::countr_zero(q));
    const int cover = std::popcount(cand & (g.adj[u] | (VertexMask{1} << u)));
    if (cover > best) {
      best = cover;
      pivot = u;
    }
  }
  // Some vertex of N[pivot] must be in every maximal extension.
  VertexMask branch = cand & (g.adj[pivot] | (VertexMask{1} << pivot));
  while (branch) {
    const Vertex v = static_cast<Vertex>(std::countr_zero(branch));
    branch &= branch - 1;
    const VertexMask closed = g.adj[v] | (VertexMask{1} << v);
    maximal_independent(g, current | (VertexMask{1} << v), cand & ~closed, excluded & ~closed,
                        out);
    cand &= ~(VertexMask{1} << v);
    excluded |= VertexMask{1} << v;
  }
}

}  // namespace

IndependentSetFamily enumerate_independent_sets(const UndirectedGraph& g, bool maximal_only,
                                                const SolverCaps& caps) {
  if (g.size() > caps.enumerate) throw CapExceeded("enumerate_independent_sets", g.size(), caps.enumerate);
  const detail::BitGraph bg(g);
  IndependentSetFamily family{g, {}, maximal_only};
  if (g.size() == 0) return family;
  if (maximal_only)
    maximal_independent(bg, 0, bg.all(), 0, family.sets);
  else
    all_independent(bg, 0, bg.all(), family.sets);
  std::sort(family.sets.begin(), family.sets.end(), lex_less);
  return family;
}

std::size_t clique_number(const UndirectedGraph& g) {
  const detail::BitGraph bg(g);
  return static_cast<std::size_t>(std::popcount(detail::maximum_clique(bg, bg.all())));
}

std::size_t independence_number(const UndirectedGraph& g) {
  const detail::BitGraph bg(g);
  const auto comp = bg.complement();
  return static_cast<std::size_t>(std::popcount(detail::maximum_clique(comp, comp.all())));
}

}  // namespace icl
