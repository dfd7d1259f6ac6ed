#include <doctest.h>

#include <random>

#include "icl/errors.hpp"
#include "icl/graph.hpp"
#include "support.hpp"

using namespace icl;

namespace {

const Digraph kFig2SideInfo(3, {{0, 1}, {0, 2}});
const Digraph kFig2Interference(3, {{1, 0}, {1, 2}, {2, 0}, {2, 1}});

}  // namespace

TEST_CASE("directed_complement") {
  CHECK(directed_complement(kFig2SideInfo) == kFig2Interference);
  CHECK(directed_complement(Digraph(2)) == Digraph(2, {{0, 1}, {1, 0}}));

  // A tournament's complement is its reversal: every pair has exactly one orientation.
  const Digraph t(4, {{0, 1}, {0, 2}, {3, 0}, {1, 2}, {1, 3}, {2, 3}});
  const Digraph c = directed_complement(t);
  CHECK(c.edge_count() == t.edge_count());
  for (const auto& [a, b] : t.edges()) {
    CHECK(c.has_edge(b, a));
    CHECK_FALSE(c.has_edge(a, b));
  }
}

TEST_CASE("underlying_undirected keeps only bidirected pairs") {
  CHECK(underlying_undirected(kFig2SideInfo).edge_count() == 0);
  CHECK(underlying_undirected(bidirected(complete_graph(3))) == complete_graph(3));
  CHECK(underlying_undirected(directed_cycle(3)).edge_count() == 0);
}

TEST_CASE("shadow forgets orientation") {
  CHECK(shadow(directed_cycle(3)) == complete_graph(3));
  CHECK(shadow(kFig2Interference) == complete_graph(3));
  CHECK(shadow(Digraph(5)).edge_count() == 0);
}

TEST_CASE("closed_out_neighborhood") {
  CHECK(closed_out_neighborhood(directed_cycle(3), 0).members == std::vector<Vertex>{0, 1});
  CHECK(closed_out_neighborhood(kFig2Interference, 1).members == std::vector<Vertex>{0, 1, 2});
  CHECK(closed_out_neighborhood(Digraph(4), 2).members == std::vector<Vertex>{2});
  CHECK_THROWS_AS(closed_out_neighborhood(Digraph(4), 4), InvalidInput);
}

TEST_CASE("edge list parsing") {
  CHECK(parse_graph("3\n0 1\n0 2\n", GraphFormat::EdgeList) == kFig2SideInfo);
  CHECK(parse_graph("2\n", GraphFormat::EdgeList) == Digraph(2));

  auto kind_of = [](const char* text) {
    try {
      parse_graph(text, GraphFormat::EdgeList);
    } catch (const ParseError& e) {
      return std::make_pair(e.kind(), e.line());
    }
    FAIL("expected a parse error");
    return std::make_pair(ParseError::Kind::Malformed, std::size_t{0});
  };
  using K = ParseError::Kind;
  CHECK(kind_of("3\n0 0\n") == std::make_pair(K::SelfLoop, std::size_t{2}));
  CHECK(kind_of("3\n0 1\n1 2\n0 1\n") == std::make_pair(K::DuplicateEdge, std::size_t{4}));
  CHECK(kind_of("3\n0 3\n") == std::make_pair(K::VertexOutOfRange, std::size_t{2}));
  CHECK(kind_of("3\n0 1 2\n") == std::make_pair(K::Malformed, std::size_t{2}));
  CHECK(kind_of("three\n") == std::make_pair(K::Malformed, std::size_t{1}));
  CHECK(kind_of("3\n-1 2\n") == std::make_pair(K::Malformed, std::size_t{2}));
  CHECK(kind_of("") == std::make_pair(K::Malformed, std::size_t{1}));
}

TEST_CASE("json parsing") {
  CHECK(parse_graph(R"({"n": 3, "edges": [[0, 1], [0, 2]]})", GraphFormat::Json) == kFig2SideInfo);
  CHECK_THROWS_AS(parse_graph(R"({"n": 3, "edges": [[1, 1]]})", GraphFormat::Json), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 3, "edges": [[0, 1, 2]]})", GraphFormat::Json), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"edges": []})", GraphFormat::Json), ParseError);
  CHECK_THROWS_AS(parse_graph("{", GraphFormat::Json), ParseError);
}

TEST_CASE("serialization round-trips byte for byte") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Digraph g = test::random_digraph(rng() % 9, 0.4, rng);
    for (auto fmt : {GraphFormat::EdgeList, GraphFormat::Json}) {
      const std::string text = serialize_graph(g, fmt);
      const Digraph back = parse_graph(text, fmt);
      CHECK(back == g);
      CHECK(serialize_graph(back, fmt) == text);
    }
  }
  CHECK(serialize_graph(kFig2SideInfo, GraphFormat::EdgeList) == "3\n0 1\n0 2\n");
}

TEST_CASE("graph identities on random digraphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 11;
    const Digraph g = test::random_digraph(n, 0.1 * static_cast<double>(rng() % 10), rng);
    CHECK(directed_complement(directed_complement(g)) == g);
    CHECK(complement(underlying_undirected(g)) == shadow(directed_complement(g)));
    CHECK(g.edge_count() + directed_complement(g).edge_count() == n * (n > 0 ? n - 1 : 0));
    const Digraph b = bidirected(test::random_graph(n, 0.5, rng));
    CHECK(shadow(b) == underlying_undirected(b));
  }
}
