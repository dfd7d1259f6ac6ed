#include "icl/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "bitgraph.hpp"
#include "icl/errors.hpp"
#include "icl/lp.hpp"

namespace icl {

namespace {

constexpr VertexMask bit(std::size_t i) { return VertexMask{1} << i; }

void require_cap(const char* solver, std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded(solver, n, cap);
  if (n > kMaxSolverVertices) throw CapExceeded(solver, n, kMaxSolverVertices);
}

// Masks derived from a digraph: shadow adjacency, N+(v), and the reverse relation.
struct LocalStructure {
  detail::BitGraph shadow;
  std::vector<VertexMask> closed_out;  // N+(v), including v
  std::vector<VertexMask> watchers;    // {u : v in N+(u)}

  explicit LocalStructure(const Digraph& g)
      : shadow(icl::shadow(g)), closed_out(g.size()), watchers(g.size()) {
    for (Vertex v = 0; v < g.size(); ++v) {
      closed_out[v] = bit(v);
      for (Vertex w : g.out(v)) closed_out[v] |= bit(w);
    }
    for (Vertex u = 0; u < g.size(); ++u)
      for (VertexMask q = closed_out[u]; q; q &= q - 1) watchers[std::countr_zero(q)] |= bit(u);
  }

  std::size_t clique_lower_bound() const {
    std::size_t best = 0;
    for (VertexMask nb : closed_out)
      best = std::max<std::size_t>(best, std::popcount(detail::maximum_clique(shadow, nb)));
    return best;
  }

  std::size_t max_closed_degree() const {
    std::size_t best = 0;
    for (VertexMask nb : closed_out) best = std::max<std::size_t>(best, std::popcount(nb));
    return best;
  }
};

// Backtracking search for a proper coloring with at most `max_colors` colors in which
// every closed out-neighborhood sees at most `local_limit` colors. Branches on the most
// constrained vertex (lowest index on ties); new colors are introduced in order.
class ColorSearch {
 public:
  ColorSearch(const LocalStructure& s, std::size_t max_colors, std::size_t local_limit)
      : s_(s),
        n_(s.shadow.n),
        max_colors_(max_colors),
        limit_(local_limit),
        color_(n_, kNone),
        forbidden_(n_, 0),
        seen_(n_, 0) {}

  std::optional<std::vector<std::size_t>> run() {
    if (n_ == 0) return std::vector<std::size_t>{};
    if (!search(0)) return std::nullopt;
    return color_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  VertexMask used_mask() const { return used_ == 64 ? ~VertexMask{0} : bit(used_) - 1; }

  void options(Vertex w, VertexMask& existing, bool& fresh) const {
    existing = used_mask() & ~forbidden_[w];
    fresh = used_ < max_colors_;
    for (VertexMask q = s_.watchers[w]; q; q &= q - 1) {
      const VertexMask seen = seen_[std::countr_zero(q)];
      if (static_cast<std::size_t>(std::popcount(seen)) >= limit_) {
        existing &= seen;
        fresh = false;
      }
    }
  }

  void assign(Vertex w, std::size_t c) {
    color_[w] = c;
    for (VertexMask q = s_.shadow.adj[w]; q; q &= q - 1) {
      const auto x = std::countr_zero(q);
      trail_.push_back({&forbidden_[x], forbidden_[x]});
      forbidden_[x] |= bit(c);
    }
    for (VertexMask q = s_.watchers[w]; q; q &= q - 1) {
      const auto u = std::countr_zero(q);
      trail_.push_back({&seen_[u], seen_[u]});
      seen_[u] |= bit(c);
    }
  }

  void undo(Vertex w, std::size_t mark) {
    while (trail_.size() > mark) {
      *trail_.back().first = trail_.back().second;
      trail_.pop_back();
    }
    color_[w] = kNone;
  }

  bool search(std::size_t depth) {
    if (depth == n_) return true;
    Vertex pick = 0;
    int best = -1;
    VertexMask pick_existing = 0;
    bool pick_fresh = false;
    for (Vertex w = 0; w < n_; ++w) {
      if (color_[w] != kNone) continue;
      VertexMask existing;
      bool fresh;
      options(w, existing, fresh);
      const int count = std::popcount(existing) + (fresh ? 1 : 0);
      if (count == 0) return false;
      if (best < 0 || count < best) {
        best = count;
        pick = w;
        pick_existing = existing;
        pick_fresh = fresh;
      }
    }
    for (VertexMask q = pick_existing; q; q &= q - 1) {
      const std::size_t mark = trail_.size();
      assign(pick, std::countr_zero(q));
      if (search(depth + 1)) return true;
      undo(pick, mark);
    }
    if (pick_fresh) {
      const std::size_t mark = trail_.size();
      assign(pick, used_++);
      if (search(depth + 1)) return true;
      --used_;
      undo(pick, mark);
    }
    return false;
  }

  const LocalStructure& s_;
  std::size_t n_;
  std::size_t max_colors_;
  std::size_t limit_;
  std::size_t used_ = 0;
  std::vector<std::size_t> color_;
  std::vector<VertexMask> forbidden_;
  std::vector<VertexMask> seen_;
  std::vector<std::pair<VertexMask*, VertexMask>> trail_;
};

// Renumbers colors by first appearance in vertex order.
std::size_t canonicalize(std::vector<std::size_t>& colors) {
  std::vector<std::size_t> remap;
  std::vector<std::size_t> seen(colors.size() + 64, static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (auto& c : colors) {
    if (c >= seen.size()) seen.resize(c + 1, static_cast<std::size_t>(-1));
    if (seen[c] == static_cast<std::size_t>(-1)) seen[c] = next++;
    c = seen[c];
  }
  return next;
}

Digraph as_digraph(const UndirectedGraph& g) { return bidirected(g); }

}  // namespace

bool is_proper(const ProperColoring& c) {
  if (c.color_of.size() != c.graph.size()) return false;
  std::vector<bool> used(c.num_colors, false);
  for (std::size_t col : c.color_of) {
    if (col >= c.num_colors) return false;
    used[col] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) return false;
  for (const auto& [a, b] : c.graph.edges())
    if (c.color_of[a] == c.color_of[b]) return false;
  return true;
}

std::size_t local_value_of(const Digraph& g, const std::vector<std::size_t>& color_of) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    std::vector<std::size_t> cs{color_of[v]};
    for (Vertex w : g.out(v)) cs.push_back(color_of[w]);
    std::sort(cs.begin(), cs.end());
    best = std::max<std::size_t>(best, std::unique(cs.begin(), cs.end()) - cs.begin());
  }
  return best;
}

ProperColoring optimal_coloring(const UndirectedGraph& g, const SolverCaps& caps) {
  require_cap("chromatic_number", g.size(), caps.enumerate);
  const LocalStructure s(as_digraph(g));
  const std::size_t n = g.size();
  for (std::size_t k = clique_number(g); k <= n; ++k) {
    if (auto colors = ColorSearch(s, k, n).run()) {
      const std::size_t used = canonicalize(*colors);
      return ProperColoring{g, std::move(*colors), used};
    }
  }
  throw CheckFailed("chromatic_number: no coloring found with n colors");
}

std::size_t chromatic_number(const UndirectedGraph& g, const SolverCaps& caps) {
  return optimal_coloring(g, caps).num_colors;
}

LocalColoring local_chromatic(const Digraph& g, const SolverCaps& caps) {
  require_cap("local_chromatic", g.size(), caps.enumerate);
  const LocalStructure s(g);
  const std::size_t n = g.size();
  const std::size_t upper = s.max_closed_degree();
  for (std::size_t t = s.clique_lower_bound(); t <= upper; ++t) {
    if (auto colors = ColorSearch(s, n, t).run()) {
      const std::size_t used = canonicalize(*colors);
      LocalColoring result{ProperColoring{shadow(g), std::move(*colors), used}, g, 0};
      result.local_value = local_value_of(g, result.base.color_of);
      return result;
    }
  }
  throw CheckFailed("local_chromatic: distinct coloring rejected");
}

bool is_feasible(const FractionalSolution& sol) {
  const auto& sets = sol.family.sets;
  if (sol.weight_of.size() != sets.size()) return false;
  const std::size_t n = sol.family.graph.size();
  for (const auto& w : sol.weight_of)
    if (w < 0) return false;
  for (VertexMask I : sets) {
    for (const auto& [a, b] : sol.family.graph.edges())
      if ((I & bit(a)) && (I & bit(b))) return false;
  }
  Rational total = 0;
  for (const auto& w : sol.weight_of) total += w;
  if (!sol.local && total > sol.objective) return false;
  for (Vertex v = 0; v < n; ++v) {
    Rational cover = 0;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i] & bit(v)) cover += sol.weight_of[i];
    if (cover < 1) return false;
  }
  if (sol.local) {
    if (!sol.digraph || sol.digraph->size() != n) return false;
    const LocalStructure s(*sol.digraph);
    for (Vertex v = 0; v < n; ++v) {
      Rational load = 0;
      for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i] & s.closed_out[v]) load += sol.weight_of[i];
      if (load > sol.objective) return false;
    }
  }
  return true;
}

FractionalSolution fractional_chromatic(const UndirectedGraph& g, const SolverCaps& caps) {
  require_cap("fractional_chromatic", g.size(), caps.enumerate);
  FractionalSolution sol;
  sol.family = enumerate_independent_sets(g, true, caps);
  const auto& sets = sol.family.sets;
  sol.weight_of.assign(sets.size(), Rational(0));
  if (g.size() == 0) return sol;

  lp::Problem problem;
  problem.objective.assign(sets.size(), Rational(1));
  for (Vertex v = 0; v < g.size(); ++v) {
    lp::Constraint c{std::vector<Rational>(sets.size()), lp::Sense::GreaterEqual, 1};
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i] & bit(v)) c.coeffs[i] = 1;
    problem.constraints.push_back(std::move(c));
  }
  const auto lp_sol = lp::solve(problem);
  if (auto err = lp::check_certificate(problem, lp_sol); !err.empty())
    throw CheckFailed("fractional_chromatic certificate: " + err);
  sol.weight_of = lp_sol.primal;
  sol.objective = lp_sol.objective;
  return sol;
}

FractionalSolution fractional_local_chromatic(const Digraph& g, const SolverCaps& caps) {
  const std::size_t n = g.size();
  const bool all_sets = n <= caps.fractional_local;
  if (!all_sets) require_cap("fractional_local_chromatic", n, caps.enumerate);
  require_cap("fractional_local_chromatic", n, kMaxSolverVertices);
  FractionalSolution sol;
  sol.family = all_sets ? enumerate_independent_sets(shadow(g), false, SolverCaps::uniform(n))
                        : enumerate_independent_sets(shadow(g), true, caps);
  sol.local = true;
  sol.exact = all_sets;
  sol.digraph = g;
  const auto& sets = sol.family.sets;
  sol.weight_of.assign(sets.size(), Rational(0));
  if (n == 0) return sol;

  const LocalStructure s(g);
  const std::size_t vars = sets.size() + 1;  // x_I then t
  lp::Problem problem;
  problem.objective.assign(vars, Rational(0));
  problem.objective.back() = 1;
  for (Vertex v = 0; v < n; ++v) {
    lp::Constraint c{std::vector<Rational>(vars), lp::Sense::GreaterEqual, 1};
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i] & bit(v)) c.coeffs[i] = 1;
    problem.constraints.push_back(std::move(c));
  }
  for (Vertex v = 0; v < n; ++v) {
    lp::Constraint c{std::vector<Rational>(vars), lp::Sense::LessEqual, 0};
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i] & s.closed_out[v]) c.coeffs[i] = 1;
    c.coeffs.back() = -1;
    problem.constraints.push_back(std::move(c));
  }
  const auto lp_sol = lp::solve(problem);
  if (auto err = lp::check_certificate(problem, lp_sol); !err.empty())
    throw CheckFailed("fractional_local_chromatic certificate: " + err);
  sol.weight_of.assign(lp_sol.primal.begin(), lp_sol.primal.end() - 1);
  sol.objective = lp_sol.objective;
  return sol;
}

bool is_valid(const RFoldColoring& c) {
  const auto& g = c.graph;
  if (c.colors_of.size() != g.size() || c.r == 0) return false;
  for (const auto& cs : c.colors_of) {
    if (cs.size() != c.r) return false;
    if (std::adjacent_find(cs.begin(), cs.end(), std::greater_equal<>()) != cs.end()) return false;
  }
  for (const auto& [a, b] : g.edges()) {
    std::vector<std::size_t> common;
    std::set_intersection(c.colors_of[a].begin(), c.colors_of[a].end(), c.colors_of[b].begin(),
                          c.colors_of[b].end(), std::back_inserter(common));
    if (!common.empty()) return false;
  }
  std::size_t best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    std::vector<std::size_t> cs = c.colors_of[v];
    for (Vertex w : g.out(v)) cs.insert(cs.end(), c.colors_of[w].begin(), c.colors_of[w].end());
    std::sort(cs.begin(), cs.end());
    best = std::max<std::size_t>(best, std::unique(cs.begin(), cs.end()) - cs.begin());
  }
  return best == c.local_value;
}

namespace {

// Assigns r-subsets of colors in vertex order; each vertex takes some existing colors
// plus a block of fresh ones, so color names are introduced in order.
class RFoldSearch {
 public:
  RFoldSearch(const LocalStructure& s, std::size_t r, std::size_t limit)
      : s_(s), n_(s.shadow.n), r_(r), limit_(limit), sets_(n_, 0), forbidden_(n_, 0), seen_(n_, 0) {}

  std::optional<std::vector<VertexMask>> run() {
    if (!search(0)) return std::nullopt;
    return sets_;
  }

 private:
  VertexMask used_mask() const { return used_ == 64 ? ~VertexMask{0} : bit(used_) - 1; }

  bool admissible(Vertex v, VertexMask chosen) const {
    for (VertexMask q = s_.watchers[v]; q; q &= q - 1) {
      if (static_cast<std::size_t>(std::popcount(seen_[std::countr_zero(q)] | chosen)) > limit_)
        return false;
    }
    return true;
  }

  // Every unassigned vertex must still be able to pick r colors within all budgets.
  bool lookahead(Vertex from) const {
    for (Vertex w = from; w < n_; ++w) {
      const VertexMask avail = used_mask() & ~forbidden_[w];
      for (VertexMask q = s_.watchers[w]; q; q &= q - 1) {
        const VertexMask seen = seen_[std::countr_zero(q)];
        const std::size_t room = limit_ - std::popcount(seen);
        if (static_cast<std::size_t>(std::popcount(avail & seen)) + room < r_) return false;
      }
    }
    return true;
  }

  void apply(Vertex v, VertexMask chosen) {
    sets_[v] = chosen;
    for (VertexMask q = s_.shadow.adj[v]; q; q &= q - 1) {
      const auto x = std::countr_zero(q);
      trail_.push_back({&forbidden_[x], forbidden_[x]});
      forbidden_[x] |= chosen;
    }
    for (VertexMask q = s_.watchers[v]; q; q &= q - 1) {
      const auto u = std::countr_zero(q);
      trail_.push_back({&seen_[u], seen_[u]});
      seen_[u] |= chosen;
    }
  }

  void undo(Vertex v, std::size_t mark) {
    while (trail_.size() > mark) {
      *trail_.back().first = trail_.back().second;
      trail_.pop_back();
    }
    sets_[v] = 0;
  }

  bool try_choice(Vertex v, VertexMask chosen, std::size_t fresh) {
    if (!admissible(v, chosen)) return false;
    const std::size_t mark = trail_.size();
    apply(v, chosen);
    used_ += fresh;
    const bool ok = lookahead(v + 1) && search(v + 1);
    if (ok) return true;
    used_ -= fresh;
    undo(v, mark);
    return false;
  }

  bool search(Vertex v) {
    if (v == n_) return true;
    const auto existing = mask_to_vertices(used_mask() & ~forbidden_[v]);
    for (std::size_t take = std::min(r_, existing.size()) + 1; take-- > 0;) {
      const std::size_t fresh = r_ - take;
      if (used_ + fresh > 64) continue;
      const VertexMask fresh_mask = fresh == 0 ? 0 : ((bit(fresh) - 1) << used_);
      // Combinations of `take` existing colors, in lexicographic order.
      std::vector<std::size_t> idx(take);
      std::iota(idx.begin(), idx.end(), 0);
      for (;;) {
        VertexMask chosen = fresh_mask;
        for (std::size_t i : idx) chosen |= bit(existing[i]);
        if (try_choice(v, chosen, fresh)) return true;
        std::size_t i = take;
        while (i > 0 && idx[i - 1] == existing.size() - take + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < take; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    return false;
  }

  const LocalStructure& s_;
  std::size_t n_;
  std::size_t r_;
  std::size_t limit_;
  std::size_t used_ = 0;
  std::vector<VertexMask> sets_;
  std::vector<VertexMask> forbidden_;
  std::vector<VertexMask> seen_;
  std::vector<std::pair<VertexMask*, VertexMask>> trail_;
};

}  // namespace

RFoldColoring r_fold_local_chromatic(const Digraph& g, std::size_t r, const SolverCaps& caps) {
  require_cap("r_fold_local_chromatic", g.size(), caps.rfold);
  if (r == 0) throw InvalidInput("r_fold_local_chromatic: r must be positive");
  if (r > caps.rfold_max_r) throw CapExceeded("r_fold_local_chromatic (r)", r, caps.rfold_max_r);
  if (r * g.size() > 64) throw CapExceeded("r_fold_local_chromatic (r*n)", r * g.size(), 64);
  const LocalStructure s(g);
  RFoldColoring result{g, r, std::vector<std::vector<std::size_t>>(g.size()), 0};
  if (g.size() == 0) return result;
  const std::size_t upper = r * s.max_closed_degree();
  for (std::size_t t = r * s.clique_lower_bound(); t <= upper; ++t) {
    if (auto sets = RFoldSearch(s, r, t).run()) {
      for (Vertex v = 0; v < g.size(); ++v) result.colors_of[v] = mask_to_vertices((*sets)[v]);
      result.local_value = t;
      // The search only guarantees <= t; recompute the attained value.
      std::size_t best = 0;
      for (Vertex v = 0; v < g.size(); ++v) {
        VertexMask cs = 0;
        for (VertexMask q = s.closed_out[v]; q; q &= q - 1) cs |= (*sets)[std::countr_zero(q)];
        best = std::max<std::size_t>(best, std::popcount(cs));
      }
      result.local_value = best;
      return result;
    }
  }
  throw CheckFailed("r_fold_local_chromatic: distinct coloring rejected");
}

std::size_t minrank2(const Digraph& side_info, const SolverCaps& caps) {
  const std::size_t n = side_info.size();
  require_cap("minrank2", n, caps.minrank);
  if (n == 0) return 0;
  std::vector<Edge> free(side_info.edges().begin(), side_info.edges().end());
  if (free.size() > 30) throw CapExceeded("minrank2 (free entries)", free.size(), 30);
  std::size_t best = n;
  const std::uint64_t combos = std::uint64_t{1} << free.size();
  std::vector<std::uint32_t> rows(n);
  for (std::uint64_t pattern = 0; pattern < combos && best > 1; ++pattern) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = std::uint32_t{1} << i;
    for (std::size_t e = 0; e < free.size(); ++e)
      if (pattern >> e & 1) rows[free[e].first] |= std::uint32_t{1} << free[e].second;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = rank;
      while (piv < n && !(rows[piv] >> col & 1)) ++piv;
      if (piv == n) continue;
      std::swap(rows[piv], rows[rank]);
      for (std::size_t i = 0; i < n; ++i)
        if (i != rank && (rows[i] >> col & 1)) rows[i] ^= rows[rank];
      ++rank;
    }
    best = std::min(best, rank);
  }
  return best;
}

}  // namespace icl
