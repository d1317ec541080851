#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "raag/graph.hpp"
#include "raag/lie.hpp"
#include "raag/linalg.hpp"

namespace raag {

// T(V)/(R) with dim V = m and R ⊆ V⊗V. Coordinate i*m + j is e_i⊗e_j.
struct QuadraticAlgebra {
  std::uint32_t m = 0;
  std::vector<SparseVec<RationalField>> relations;  // reduced row echelon

  bool operator==(const QuadraticAlgebra&) const = default;
};

// Canonical (reduced row echelon) basis of the span of `rows`.
std::vector<SparseVec<RationalField>> canonical_span(
    std::uint32_t ncols, const std::vector<SparseVec<RationalField>>& rows);

QuadraticAlgebra make_quadratic_algebra(
    std::uint32_t m, const std::vector<SparseVec<RationalField>>& rows);

QuadraticAlgebra enveloping_quadratic(const QuadLiePresentation& l);

HilbertSeries algebra_hilbert(const QuadraticAlgebra& a, int max_degree,
                              const ComputeOptions& opts = {});

QuadraticAlgebra quadratic_dual(const QuadraticAlgebra& a);

struct NumericKoszulResult {
  bool pass;
  std::optional<int> first_failure;
};

NumericKoszulResult koszul_numeric_test(const HilbertSeries& ha,
                                        const HilbertSeries& hdual,
                                        int max_degree);

struct FrobergResult {
  bool pass;
  HilbertSeries lhs;
  HilbertSeries rhs;
};

// Coefficients of 1/P(-t) for the clique polynomial P, through max_degree.
HilbertSeries inverse_clique_series(const std::vector<long long>& clique,
                                    int max_degree);

FrobergResult froberg_check(const Graph& g, int max_degree,
                            const ComputeOptions& opts = {});

}  // namespace raag
