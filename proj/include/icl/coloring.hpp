#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "icl/graph.hpp"
#include "icl/rational.hpp"

namespace icl {

/// Vertex subsets as 64-bit masks; the exact solvers work on graphs with at most 64 vertices.
using VertexMask = std::uint64_t;
inline constexpr std::size_t kMaxSolverVertices = 64;

std::vector<Vertex> mask_to_vertices(VertexMask mask);
VertexMask vertices_to_mask(const std::vector<Vertex>& vertices);

/// Per-solver instance size limits. Defaults follow the documented caps; raising
/// them is allowed but the solvers are exponential.
struct SolverCaps {
  std::size_t enumerate = 20;         // independent-set enumeration, chi, chi_f, chi_local
  std::size_t fractional_local = 15;  // all-independent-set LP for chi_fl
  std::size_t rfold = 10;
  std::size_t rfold_max_r = 4;
  std::size_t minrank = 5;

  static SolverCaps defaults() { return {}; }
  /// Applies a single vertex cap to every solver except minrank.
  static SolverCaps uniform(std::size_t n);
};

struct IndependentSetFamily {
  UndirectedGraph graph;
  std::vector<VertexMask> sets;  // nonempty, ordered lexicographically by sorted vertex list
  bool maximal_only = false;
};

/// Lexicographic comparison of the sorted vertex lists of two sets.
bool lex_less(VertexMask a, VertexMask b);

IndependentSetFamily enumerate_independent_sets(const UndirectedGraph& g, bool maximal_only,
                                                const SolverCaps& caps = {});

struct ProperColoring {
  UndirectedGraph graph;
  std::vector<std::size_t> color_of;
  std::size_t num_colors = 0;
};

/// Adjacent vertices differ and every color below num_colors is used.
bool is_proper(const ProperColoring& c);

struct LocalColoring {
  ProperColoring base;  // coloring of shadow(digraph)
  Digraph digraph;
  std::size_t local_value = 0;
};

/// max over v of the number of distinct colors in N+(v).
std::size_t local_value_of(const Digraph& g, const std::vector<std::size_t>& color_of);

/// Weights on independent sets of shadow(graph) (or of `family.graph` for chi_f).
struct FractionalSolution {
  IndependentSetFamily family;
  std::vector<Rational> weight_of;  // parallel to family.sets
  Rational objective;
  bool local = false;  // locality constraints apply (chi_fl)
  bool exact = true;   // false when the LP ran over a restricted family
  std::optional<Digraph> digraph;  // present when local
};

/// Exact re-check of coverage and (when local) locality against `objective`.
bool is_feasible(const FractionalSolution& sol);

struct RFoldColoring {
  Digraph graph;
  std::size_t r = 1;
  std::vector<std::vector<std::size_t>> colors_of;  // r sorted colors per vertex
  std::size_t local_value = 0;
};

bool is_valid(const RFoldColoring& c);

/// Exact, by branch and bound; limited only by the 64-vertex solver width.
std::size_t clique_number(const UndirectedGraph& g);
std::size_t independence_number(const UndirectedGraph& g);

/// Exact chromatic number with an optimal coloring.
ProperColoring optimal_coloring(const UndirectedGraph& g, const SolverCaps& caps = {});
std::size_t chromatic_number(const UndirectedGraph& g, const SolverCaps& caps = {});

/// Covering LP over maximal independent sets; exact value and certificate.
FractionalSolution fractional_chromatic(const UndirectedGraph& g, const SolverCaps& caps = {});

/// min over proper colorings of shadow(g) of the most colorful closed out-neighborhood.
LocalColoring local_chromatic(const Digraph& g, const SolverCaps& caps = {});

/// LP relaxation of the local coloring integer program. Uses all independent sets up to
/// caps.fractional_local vertices and maximal sets only (an upper bound, exact=false) above.
FractionalSolution fractional_local_chromatic(const Digraph& g, const SolverCaps& caps = {});

RFoldColoring r_fold_local_chromatic(const Digraph& g, std::size_t r, const SolverCaps& caps = {});

/// Minimum GF(2) rank of a matrix with unit diagonal and zeros at (i,j), i != j, whenever
/// (i,j) is not a side-information edge.
std::size_t minrank2(const Digraph& side_info, const SolverCaps& caps = {});

}  // namespace icl
