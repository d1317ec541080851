#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raag/vertex_set.hpp"

namespace raag {

using Edge = std::pair<Vertex, Vertex>;

// Finite simple graph on vertices 0..n-1 with a name per vertex.
class Graph {
 public:
  Graph() = default;
  // Vertices named "0", "1", ...
  explicit Graph(std::size_t n);
  explicit Graph(std::vector<std::string> names);
  Graph(std::vector<std::string> names, const std::vector<Edge>& edges);

  static Graph discrete(std::size_t n);
  static Graph complete(std::size_t n);
  // Vertices 0-1-2-...-(n-1).
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  // Center 0, leaves 1..k.
  static Graph star_graph(std::size_t leaves);
  // Graph on n vertices whose edges are the set bits of `mask` in the
  // order (0,1), (0,2), (1,2), (0,3), ...
  static Graph from_edge_mask(std::size_t n, std::uint64_t mask);

  // Adding edges is only meant for construction.
  void add_edge(Vertex a, Vertex b);

  std::size_t size() const { return adj_.size(); }
  VertexSet vertices() const { return VertexSet::first(size()); }
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Vertex> find(std::string_view name) const;
  // Throws InputError naming the vertex when absent.
  Vertex at(std::string_view name) const;

  bool adjacent(Vertex a, Vertex b) const { return adj_[a].contains(b); }
  VertexSet link(Vertex v) const { return adj_[v]; }
  VertexSet star(Vertex v) const { return adj_[v] | VertexSet::singleton(v); }
  bool contains(VertexSet s) const { return s.subset_of(vertices()); }

  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  bool is_complete() const;

  // Full subgraph on s, vertices renumbered in increasing order; names kept.
  Graph induced(VertexSet s) const;
  // Disjoint union; the second graph's vertices come after the first's.
  Graph disjoint_union(const Graph& other) const;
  // Join: disjoint union plus every edge between the two parts.
  Graph join(const Graph& other) const;

  // "{a,b,c}" using vertex names.
  std::string format(VertexSet s) const;
  std::vector<std::string> name_list(VertexSet s) const;

  bool operator==(const Graph& o) const {
    return names_ == o.names_ && adj_ == o.adj_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> adj_;
};

// Maps a subset of `from` (given by the ambient set the subgraph was induced
// on) into the coordinates of the induced graph, and back.
VertexSet restrict_to(VertexSet ambient, VertexSet s);
VertexSet lift_from(VertexSet ambient, VertexSet s);

}  // namespace raag
