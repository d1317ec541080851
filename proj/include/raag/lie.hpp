#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "raag/graph.hpp"
#include "raag/linalg.hpp"
#include "raag/presentation.hpp"

namespace raag {

// q * [g_i, g_j] with i < j.
struct BracketTerm {
  std::uint32_t i;
  std::uint32_t j;
  mpq_class q;

  bool operator==(const BracketTerm&) const = default;
};

// A formal sum of brackets, terms sorted by (i, j) and merged.
using LieRelator = std::vector<BracketTerm>;

using LinearRelation = std::vector<std::pair<std::uint32_t, mpq_class>>;

struct QuadLiePresentation {
  std::vector<std::string> generators;
  std::vector<LinearRelation> linear_relations;
  std::vector<LieRelator> quadratic_relators;

  std::size_t size() const { return generators.size(); }
};

// Sorts, merges and drops zero terms; brackets [g, g] vanish and [g_j, g_i]
// becomes -[g_i, g_j].
LieRelator normalize_relator(std::vector<BracketTerm> terms);

struct LieVariant {
  enum class Kind { PAut, POut, Raag, PAutLike };
  Kind kind = Kind::PAut;
  std::optional<OmegaPartition> omega;  // PAutLike only

  static LieVariant paut() { return {Kind::PAut, std::nullopt}; }
  static LieVariant pout() { return {Kind::POut, std::nullopt}; }
  static LieVariant raag() { return {Kind::Raag, std::nullopt}; }
  static LieVariant paut_like(OmegaPartition o) {
    return {Kind::PAutLike, std::move(o)};
  }
};

// Lie counterpart of a group presentation: products become sums, so a
// commutator relator [X, Y] maps to the bilinear expansion and a product
// relator to a linear relation.
QuadLiePresentation lie_from_group(const Graph& g, const GroupPresentation& p);

QuadLiePresentation lie_presentation(const Graph& g, const LieVariant& variant);

QuadLiePresentation eliminate_linear(const QuadLiePresentation& l);

using GradedDims = std::vector<long long>;
using HilbertSeries = std::vector<long long>;

// Dimensions of the free Lie algebra on m generators in degree n.
long long witt_number(long long m, int n);

// Lyndon words of length n over {0..m-1}, encoded in base m, ascending.
std::vector<std::uint64_t> lyndon_words(std::uint32_t m, int n);

GradedDims graded_dims(const QuadLiePresentation& l, int max_degree,
                       const ComputeOptions& opts = {});

HilbertSeries pbw_hilbert(const GradedDims& dims, int max_degree);

}  // namespace raag
