#pragma once

#include <array>
#include <optional>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

struct Neighborhood {
  VertexSet link;
  VertexSet star;
};

Neighborhood neighborhood(const Graph& g, Vertex v);

// Connected components of the full subgraph on s, ordered by least vertex.
std::vector<VertexSet> induced_components(const Graph& g, VertexSet s);

// Components of the complement of st(v).
std::vector<VertexSet> star_complement_components(const Graph& g, Vertex v);

struct ComponentClass {
  enum class Tag { Dominant, Subordinate, Shared };
  Tag tag;
  // For Dominant: the opposite vertex of the pair that the component holds.
  std::optional<Vertex> contains;
};

const char* to_string(ComponentClass::Tag t);

struct ClassifiedComponent {
  VertexSet component;
  ComponentClass cls;
};

struct PairClassification {
  Vertex v;
  Vertex w;
  std::vector<ClassifiedComponent> v_side;  // components of Γ∖st(v)
  std::vector<ClassifiedComponent> w_side;  // components of Γ∖st(w)

  std::vector<VertexSet> shared() const;
};

PairClassification classify_components(const Graph& g, Vertex v, Vertex w);

struct SilPair {
  Vertex v;
  Vertex w;
  std::vector<VertexSet> shared;
};

std::vector<SilPair> find_sil_pairs(const Graph& g);

struct StarCondition {
  bool holds;
  std::optional<std::array<Vertex, 4>> witness;
};

StarCondition check_star_condition(const Graph& g);

// Number of k-cliques for k = 0..clique number.
std::vector<long long> clique_polynomial(const Graph& g);

}  // namespace raag
