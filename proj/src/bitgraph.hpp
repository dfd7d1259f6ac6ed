#pragma once

#include <vector>

#include "icl/coloring.hpp"

namespace icl::detail {

/// Adjacency as one mask per vertex; n <= 64.
struct BitGraph {
  std::size_t n = 0;
  std::vector<VertexMask> adj;

  BitGraph() = default;
  explicit BitGraph(const UndirectedGraph& g);

  VertexMask all() const;
  BitGraph complement() const;
};

/// Largest clique inside `within` (branch and bound with a greedy coloring bound).
VertexMask maximum_clique(const BitGraph& g, VertexMask within);

}  // namespace icl::detail
