#include "icl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "icl/errors.hpp"

namespace icl {

Digraph::Digraph(std::size_t n) : n_(n), out_(n) {}

Digraph::Digraph(std::size_t n, const std::vector<Edge>& edges) : Digraph(n) {
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw InvalidInput("edge (" + std::to_string(a) + "," + std::to_string(b) +
                         ") has an endpoint >= n=" + std::to_string(n));
    }
    if (a == b) throw InvalidInput("self-loop at vertex " + std::to_string(a));
    if (!add_edge(a, b)) {
      throw InvalidInput("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
}

bool Digraph::has_edge(Vertex from, Vertex to) const { return edges_.count({from, to}) != 0; }

bool Digraph::add_edge(Vertex from, Vertex to) {
  if (from >= n_ || to >= n_ || from == to) {
    throw InvalidInput("invalid edge (" + std::to_string(from) + "," + std::to_string(to) + ")");
  }
  if (!edges_.insert({from, to}).second) return false;
  auto& row = out_[from];
  row.insert(std::upper_bound(row.begin(), row.end(), to), to);
  return true;
}

UndirectedGraph::UndirectedGraph(std::size_t n) : n_(n), adj_(n) {}

UndirectedGraph::UndirectedGraph(std::size_t n, const std::vector<Edge>& edges)
    : UndirectedGraph(n) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

bool UndirectedGraph::adjacent(Vertex a, Vertex b) const {
  return edges_.count({std::min(a, b), std::max(a, b)}) != 0;
}

bool UndirectedGraph::add_edge(Vertex a, Vertex b) {
  if (a >= n_ || b >= n_ || a == b) {
    throw InvalidInput("invalid undirected edge {" + std::to_string(a) + "," +
                       std::to_string(b) + "}");
  }
  if (!edges_.insert({std::min(a, b), std::max(a, b)}).second) return false;
  adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b), b);
  adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a), a);
  return true;
}

Digraph directed_complement(const Digraph& g) {
  Digraph result(g.size());
  for (Vertex i = 0; i < g.size(); ++i) {
    for (Vertex j = 0; j < g.size(); ++j) {
      if (i != j && !g.has_edge(i, j)) result.add_edge(i, j);
    }
  }
  return result;
}

UndirectedGraph underlying_undirected(const Digraph& g) {
  UndirectedGraph result(g.size());
  for (const auto& [a, b] : g.edges()) {
    if (a < b && g.has_edge(b, a)) result.add_edge(a, b);
  }
  return result;
}

UndirectedGraph shadow(const Digraph& g) {
  UndirectedGraph result(g.size());
  for (const auto& [a, b] : g.edges()) result.add_edge(a, b);
  return result;
}

UndirectedGraph complement(const UndirectedGraph& g) {
  UndirectedGraph result(g.size());
  for (Vertex i = 0; i < g.size(); ++i) {
    for (Vertex j = i + 1; j < g.size(); ++j) {
      if (!g.adjacent(i, j)) result.add_edge(i, j);
    }
  }
  return result;
}

Digraph bidirected(const UndirectedGraph& g) {
  Digraph result(g.size());
  for (const auto& [a, b] : g.edges()) {
    result.add_edge(a, b);
    result.add_edge(b, a);
  }
  return result;
}

ClosedOutNeighborhood closed_out_neighborhood(const Digraph& g, Vertex v) {
  if (v >= g.size()) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range for n=" +
                       std::to_string(g.size()));
  }
  ClosedOutNeighborhood nb{v, g.out(v)};
  nb.members.insert(std::lower_bound(nb.members.begin(), nb.members.end(), v), v);
  return nb;
}

namespace {

bool parse_index(std::string_view token, std::size_t& value) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

void add_checked(Digraph& g, std::size_t a, std::size_t b, std::size_t line) {
  using K = ParseError::Kind;
  if (a >= g.size() || b >= g.size()) {
    throw ParseError(K::VertexOutOfRange, line,
                     "vertex index " + std::to_string(std::max(a, b)) + " >= n=" +
                         std::to_string(g.size()));
  }
  if (a == b) throw ParseError(K::SelfLoop, line, "self-loop at vertex " + std::to_string(a));
  if (!g.add_edge(a, b)) {
    throw ParseError(K::DuplicateEdge, line,
                     "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
  }
}

Digraph parse_edge_list(std::string_view text) {
  using K = ParseError::Kind;
  std::optional<Digraph> g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (!g) {
      std::size_t n = 0;
      if (tokens.size() != 1 || !parse_index(tokens[0], n)) {
        throw ParseError(K::Malformed, line_no, "expected vertex count, got '" +
                                                    std::string(line) + "'");
      }
      g.emplace(n);
      continue;
    }
    std::size_t a = 0;
    std::size_t b = 0;
    if (tokens.size() != 2 || !parse_index(tokens[0], a) || !parse_index(tokens[1], b)) {
      throw ParseError(K::Malformed, line_no, "expected 'i j', got '" + std::string(line) + "'");
    }
    add_checked(*g, a, b, line_no);
  }
  if (!g) throw ParseError(K::Malformed, 1, "missing vertex count");
  return std::move(*g);
}

Digraph parse_json_graph(std::string_view text) {
  using K = ParseError::Kind;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(K::Malformed, 0, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned() ||
      !doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError(K::Malformed, 0, "expected {\"n\": int, \"edges\": [[i,j],...]}");
  }
  Digraph g(doc["n"].get<std::size_t>());
  std::size_t index = 0;
  for (const auto& e : doc["edges"]) {
    ++index;
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw ParseError(K::Malformed, index, "edge entry must be [i, j]");
    }
    add_checked(g, e[0].get<std::size_t>(), e[1].get<std::size_t>(), index);
  }
  return g;
}

}  // namespace

Digraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Json ? parse_json_graph(text) : parse_edge_list(text);
}

std::string serialize_graph(const Digraph& g, GraphFormat format) {
  if (format == GraphFormat::Json) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    nlohmann::json doc = {{"n", g.size()}, {"edges", edges}};
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  out << g.size() << '\n';
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

GraphFormat format_for_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0 ? GraphFormat::Json
                                                                            : GraphFormat::EdgeList;
}

Digraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format_for_path(path));
}

UndirectedGraph cycle_graph(std::size_t n) {
  UndirectedGraph g(n);
  for (Vertex i = 0; n >= 3 && i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

UndirectedGraph complete_graph(std::size_t n) {
  UndirectedGraph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Digraph directed_cycle(std::size_t n) {
  Digraph g(n);
  for (Vertex i = 0; n >= 2 && i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace icl
