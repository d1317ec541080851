#include <doctest.h>

#include "raag/errors.hpp"
#include "raag/graph_core.hpp"
#include "raag/lie.hpp"
#include "raag/quadratic.hpp"
#include "support/graphs.hpp"

using namespace raag;

namespace {

QuadLiePresentation lie_on(std::uint32_t m, std::vector<LieRelator> rels) {
  QuadLiePresentation l;
  for (std::uint32_t i = 0; i < m; ++i) l.generators.push_back("x" + std::to_string(i));
  l.quadratic_relators = std::move(rels);
  return l;
}

QuadraticAlgebra polynomial2() { return enveloping_quadratic(lie_on(2, {{{0, 1, 1}}})); }

}  // namespace

TEST_CASE("enveloping algebras") {
  auto a = polynomial2();
  CHECK(a.m == 2);
  REQUIRE(a.relations.size() == 1);
  // e_x⊗e_y - e_y⊗e_x
  CHECK(a.relations[0] == SparseVec<RationalField>{{1, 1}, {2, -1}});
  CHECK(enveloping_quadratic(lie_on(2, {})).relations.empty());
  CHECK(enveloping_quadratic(lie_presentation(Graph::discrete(3), LieVariant::paut()))
            .relations.size() == 9);
  CHECK_THROWS_AS(enveloping_quadratic(lie_presentation(Graph::path(3), LieVariant::pout())),
                  PreconditionError);
}

TEST_CASE("Hilbert series") {
  CHECK(algebra_hilbert(enveloping_quadratic(lie_on(2, {})), 3) == HilbertSeries{1, 2, 4, 8});
  CHECK(algebra_hilbert(polynomial2(), 3) == HilbertSeries{1, 2, 3, 4});
  auto path = enveloping_quadratic(lie_presentation(Graph::path(3), LieVariant::raag()));
  CHECK(algebra_hilbert(path, 4) == HilbertSeries{1, 3, 7, 15, 31});
  CHECK(algebra_hilbert(path, 0) == HilbertSeries{1});
}

TEST_CASE("quadratic duals") {
  CHECK(algebra_hilbert(quadratic_dual(polynomial2()), 3) == HilbertSeries{1, 2, 1, 0});
  CHECK(algebra_hilbert(quadratic_dual(enveloping_quadratic(lie_on(3, {}))), 2) ==
        HilbertSeries{1, 3, 0});
  auto path = enveloping_quadratic(lie_presentation(Graph::path(3), LieVariant::raag()));
  CHECK(algebra_hilbert(quadratic_dual(path), 3) == HilbertSeries{1, 3, 2, 0});
}

TEST_CASE("dual dimensions and involution") {
  for (const auto& g : testing::all_graphs_up_to(4))
    for (auto v : {LieVariant::paut(), LieVariant::raag()}) {
      auto a = enveloping_quadratic(lie_presentation(g, v));
      auto d = quadratic_dual(a);
      CHECK(a.relations.size() + d.relations.size() == std::size_t{a.m} * a.m);
      CHECK(quadratic_dual(d) == a);
    }
}

TEST_CASE("Hilbert growth bound") {
  for (const auto& g : testing::iso_classes_up_to(4)) {
    auto a = enveloping_quadratic(lie_presentation(g, LieVariant::paut()));
    auto h = algebra_hilbert(a, 4);
    CHECK(h[0] == 1);
    CHECK(h[1] == a.m);
    for (int n = 1; n <= 4; ++n) CHECK(h[n] <= h[n - 1] * a.m);
  }
}

TEST_CASE("numeric Koszul test") {
  auto a = polynomial2();
  auto ha = algebra_hilbert(a, 5);
  CHECK(koszul_numeric_test(ha, algebra_hilbert(quadratic_dual(a), 5), 5).pass);

  auto path = enveloping_quadratic(lie_presentation(Graph::path(3), LieVariant::raag()));
  auto r = koszul_numeric_test(algebra_hilbert(path, 6),
                               algebra_hilbert(quadratic_dual(path), 6), 6);
  CHECK(r.pass);
  CHECK_FALSE(r.first_failure);

  auto ext3 = quadratic_dual(enveloping_quadratic(lie_on(3, {{{0, 1, 1}}, {{0, 2, 1}}, {{1, 2, 1}}})));
  r = koszul_numeric_test(ha, algebra_hilbert(ext3, 5), 5);
  CHECK_FALSE(r.pass);
  CHECK(r.first_failure == 1);

  CHECK_THROWS_AS(koszul_numeric_test({1, 2}, {1, 2, 1}, 3), InputError);
}

TEST_CASE("Froberg identity") {
  auto r = froberg_check(Graph::discrete(2), 5);
  CHECK(r.pass);
  CHECK(r.lhs == HilbertSeries{1, 2, 4, 8, 16, 32});
  CHECK(r.rhs == r.lhs);
  r = froberg_check(Graph::path(3), 5);
  CHECK(r.pass);
  CHECK(r.lhs == HilbertSeries{1, 3, 7, 15, 31, 63});
  for (const auto& g : testing::all_graphs_up_to(4)) CHECK(froberg_check(g, 5).pass);
  CHECK(inverse_clique_series({1, 2, 1}, 3) == HilbertSeries{1, 2, 3, 4});
}

TEST_CASE("fast Hilbert series agree") {
  ComputeOptions fast;
  fast.fast = true;
  for (const auto& g : testing::iso_classes_up_to(4)) {
    auto a = enveloping_quadratic(lie_presentation(g, LieVariant::paut()));
    CHECK(algebra_hilbert(a, 3, fast) == algebra_hilbert(a, 3));
  }
}

TEST_CASE("memory guard") {
  ComputeOptions tight;
  tight.memory_limit = 1024;
  auto a = enveloping_quadratic(lie_presentation(Graph::discrete(4), LieVariant::paut()));
  CHECK_THROWS_AS(algebra_hilbert(a, 4, tight), ResourceError);
  CHECK_THROWS_WITH_AS(graded_dims(lie_presentation(Graph::discrete(4), LieVariant::paut()), 4, tight),
                       doctest::Contains("degree"), ResourceError);
}
