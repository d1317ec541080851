#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// c_A^v: conjugates every vertex of A by v.
struct PartialConjugation {
  Vertex actor;
  VertexSet base;

  bool operator==(const PartialConjugation&) const = default;
};

bool generator_less(const PartialConjugation& a, const PartialConjugation& b);
std::string format_generator(const Graph& g, const PartialConjugation& c);

struct Letter {
  std::uint32_t gen;
  int exp;  // +1 or -1

  bool operator==(const Letter&) const = default;
};

using GroupWord = std::vector<Letter>;

// Relators are either commutators [X, Y] of two products of generators, or
// a single product. Index lists are sorted; all generators inside one list
// share an actor and so commute.
struct Relator {
  enum class Shape { Commutator, Product };
  Shape shape;
  std::vector<std::uint32_t> left;
  std::vector<std::uint32_t> right;  // empty for products

  // [X, Y] = X^-1 Y^-1 X Y
  GroupWord word() const;
  bool operator==(const Relator&) const = default;
};

bool relator_less(const Relator& a, const Relator& b);

enum class PresentationKind { PAut, POut, PAutLike };
const char* to_string(PresentationKind k);

struct GroupPresentation {
  PresentationKind kind;
  std::vector<PartialConjugation> generators;
  std::vector<Relator> relators;

  std::optional<std::uint32_t> index_of(const PartialConjugation& c) const;
};

// For each vertex v a partition of Γ∖st(v) into unions of components.
// Blocks are kept in canonical order.
class OmegaPartition {
 public:
  OmegaPartition() = default;
  // Validates every invariant; throws ValidationError naming the block.
  OmegaPartition(const Graph& g, std::vector<std::vector<VertexSet>> blocks);
  // Sorts blocks but checks nothing.
  static OmegaPartition unchecked(std::vector<std::vector<VertexSet>> blocks);

  std::size_t vertex_count() const { return blocks_.size(); }
  const std::vector<VertexSet>& of(Vertex v) const { return blocks_.at(v); }
  const std::vector<std::vector<VertexSet>>& all() const { return blocks_; }
  std::size_t block_count() const;

  // The block of Ω^v holding u, if any.
  std::optional<VertexSet> block_containing(Vertex v, Vertex u) const;

  bool operator==(const OmegaPartition&) const = default;

 private:
  std::vector<std::vector<VertexSet>> blocks_;
};

void validate_omega(const Graph& g, const OmegaPartition& omega);

enum class BlockRole { Dominant, Subordinate, Shared, Other };

// Role of a block A of Ω^v relative to the non-adjacent pair (v, w).
BlockRole block_role(const OmegaPartition& omega, Vertex v, Vertex w,
                     VertexSet a);

OmegaPartition standard_omega(const Graph& g);

GroupPresentation paut_like_presentation(const Graph& g,
                                         const OmegaPartition& omega);
GroupPresentation paut_presentation(const Graph& g);
GroupPresentation pout_presentation(const Graph& g,
                                    const OmegaPartition& omega);
GroupPresentation pout_presentation(const Graph& g);

struct OmegaSplit {
  // Ω_P^v in Γ coordinates (empty list for v outside Δ).
  std::vector<std::vector<VertexSet>> p_blocks;
  OmegaPartition kernel;  // Ω_H on Γ
  VertexSet delta;
  Graph quotient_graph;    // Γ[Δ]
  OmegaPartition quotient; // Ω_P restricted to Δ, Δ coordinates
};

// The kernel and quotient are valid partitions when delta is preserved by
// every generator of omega; they are returned unvalidated.
OmegaSplit omega_split(const Graph& g, const OmegaPartition& omega,
                       VertexSet delta);

bool is_raag_shaped(const GroupPresentation& p);

}  // namespace raag
