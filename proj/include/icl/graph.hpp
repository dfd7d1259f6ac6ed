#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace icl {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Directed graph on vertices 0..n-1 without self-loops or parallel edges.
/// Used both for side-information graphs and for interference graphs.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);
  /// Throws InvalidInput on self-loops, duplicates or out-of-range endpoints.
  Digraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t size() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }
  bool has_edge(Vertex from, Vertex to) const;
  /// Out-neighbours in increasing order.
  const std::vector<Vertex>& out(Vertex v) const { return out_.at(v); }

  /// Adds an edge; returns false if it was already present.
  bool add_edge(Vertex from, Vertex to);

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::set<Edge> edges_;
  std::vector<std::vector<Vertex>> out_;
};

/// Simple undirected graph; edges are stored as (min, max) pairs.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t n);
  UndirectedGraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t size() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }
  bool adjacent(Vertex a, Vertex b) const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }

  bool add_edge(Vertex a, Vertex b);

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::set<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// N+(v): the vertex together with its out-neighbours, sorted.
struct ClosedOutNeighborhood {
  Vertex vertex = 0;
  std::vector<Vertex> members;
};

/// Edge (i,j) present iff i != j and (i,j) is absent from g. Maps a side-information
/// graph to its interference graph and back.
Digraph directed_complement(const Digraph& g);

/// Keeps only bidirected pairs, each as one undirected edge.
UndirectedGraph underlying_undirected(const Digraph& g);

/// Forgets orientation; a bidirected pair becomes a single edge.
UndirectedGraph shadow(const Digraph& g);

UndirectedGraph complement(const UndirectedGraph& g);

/// Every undirected edge replaced by both orientations.
Digraph bidirected(const UndirectedGraph& g);

ClosedOutNeighborhood closed_out_neighborhood(const Digraph& g, Vertex v);

enum class GraphFormat { EdgeList, Json };

/// Edge list: first line "n", then one "i j" line per directed edge i->j.
/// JSON: {"n": int, "edges": [[i, j], ...]}.
Digraph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Digraph& g, GraphFormat format);

/// Picks the format from the file extension (".json" means JSON).
GraphFormat format_for_path(const std::string& path);
Digraph read_graph_file(const std::string& path);

// Small named graphs used across tests and the CLI.
UndirectedGraph cycle_graph(std::size_t n);
UndirectedGraph complete_graph(std::size_t n);
Digraph directed_cycle(std::size_t n);

}  // namespace icl
