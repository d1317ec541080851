#include "raag/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "raag/errors.hpp"

namespace raag {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

}  // namespace

Graph::Graph(std::size_t n) : Graph(numbered(n)) {}

Graph::Graph(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVertices)
    throw ResourceError("graph has " + std::to_string(names_.size()) +
                        " vertices; at most 64 are supported");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second)
      throw InputError("duplicate vertex '" + n + "'");
  adj_.assign(names_.size(), VertexSet{});
}

Graph::Graph(std::vector<std::string> names, const std::vector<Edge>& edges)
    : Graph(std::move(names)) {
  for (auto [a, b] : edges) add_edge(a, b);
}

Graph Graph::discrete(std::size_t n) { return Graph(n); }

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (Vertex a = 0; a + 1 < n; ++a) g.add_edge(a, a + 1);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

Graph Graph::star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex b = 1; b <= leaves; ++b) g.add_edge(0, b);
  return g;
}

Graph Graph::from_edge_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (Vertex b = 1; b < n; ++b)
    for (Vertex a = 0; a < b; ++a, ++bit)
      if ((mask >> bit) & 1U) g.add_edge(a, b);
  return g;
}

void Graph::add_edge(Vertex a, Vertex b) {
  if (a >= size() || b >= size())
    throw InputError("edge endpoint out of range");
  if (a == b) throw InputError("self-loop at vertex '" + names_[a] + "'");
  adj_[a].insert(b);
  adj_[b].insert(a);
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  for (Vertex v = 0; v < names_.size(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

Vertex Graph::at(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex a = 0; a < size(); ++a)
    for (Vertex b : adj_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto s : adj_) twice += s.size();
  return twice / 2;
}

bool Graph::is_complete() const {
  for (Vertex v = 0; v < size(); ++v)
    if (star(v) != vertices()) return false;
  return true;
}

Graph Graph::induced(VertexSet s) const {
  if (!contains(s)) throw InputError("vertex set is not a subset of the graph");
  std::vector<std::string> names;
  for (Vertex v : s) names.push_back(names_[v]);
  Graph g(std::move(names));
  for (Vertex v : s) g.adj_[restrict_to(s, VertexSet::singleton(v)).least()] =
      restrict_to(s, adj_[v] & s);
  return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
  std::vector<std::string> names = names_;
  for (const auto& n : other.names_) {
    std::string m = n;
    while (std::find(names.begin(), names.end(), m) != names.end()) m += "'";
    names.push_back(m);
  }
  Graph g(std::move(names));
  const auto off = static_cast<Vertex>(size());
  for (auto [a, b] : edges()) g.add_edge(a, b);
  for (auto [a, b] : other.edges()) g.add_edge(a + off, b + off);
  return g;
}

Graph Graph::join(const Graph& other) const {
  Graph g = disjoint_union(other);
  const auto off = static_cast<Vertex>(size());
  for (Vertex a = 0; a < size(); ++a)
    for (Vertex b = 0; b < other.size(); ++b) g.add_edge(a, b + off);
  return g;
}

std::string Graph::format(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += names_.at(v);
    first = false;
  }
  return out + "}";
}

std::vector<std::string> Graph::name_list(VertexSet s) const {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(names_.at(v));
  return out;
}

VertexSet restrict_to(VertexSet ambient, VertexSet s) {
  VertexSet out;
  Vertex i = 0;
  for (Vertex v : ambient) {
    if (s.contains(v)) out.insert(i);
    ++i;
  }
  return out;
}

VertexSet lift_from(VertexSet ambient, VertexSet s) {
  VertexSet out;
  Vertex i = 0;
  for (Vertex v : ambient) {
    if (s.contains(i)) out.insert(v);
    ++i;
  }
  return out;
}

}  // namespace raag
