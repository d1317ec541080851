#include <doctest.h>

#include <set>

#include "raag/errors.hpp"
#include "raag/day_wade.hpp"
#include "raag/graph_core.hpp"
#include "raag/presentation.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

using namespace raag;
using testing::make_graph;
using testing::vs;

namespace {

std::size_t count_shape(const GroupPresentation& p, Relator::Shape s, std::size_t len) {
  std::size_t k = 0;
  for (const auto& r : p.relators)
    if (r.shape == s && r.word().size() == len) ++k;
  return k;
}

}  // namespace

TEST_CASE("standard omega") {
  auto d = make_graph("uvw", "");
  auto o = standard_omega(d);
  CHECK(o.of(d.at("v")) == std::vector<VertexSet>{vs(d, "u"), vs(d, "w")});

  auto p = make_graph("abc", "ab bc");
  o = standard_omega(p);
  CHECK(o.of(p.at("a")) == std::vector<VertexSet>{vs(p, "c")});
  CHECK(o.of(p.at("b")).empty());

  o = standard_omega(Graph::complete(3));
  for (Vertex v = 0; v < 3; ++v) CHECK(o.of(v).empty());
}

TEST_CASE("PAut presentations") {
  auto d3 = paut_presentation(Graph::discrete(3));
  CHECK(d3.kind == PresentationKind::PAut);
  CHECK(d3.generators.size() == 6);
  CHECK(d3.relators.size() == 9);
  CHECK(count_shape(d3, Relator::Shape::Commutator, 4) == 3);
  CHECK(count_shape(d3, Relator::Shape::Commutator, 6) == 6);

  auto k3 = paut_presentation(Graph::complete(3));
  CHECK(k3.generators.empty());
  CHECK(k3.relators.empty());

  auto g = make_graph("abc", "ab bc");
  auto p = paut_presentation(g);
  REQUIRE(p.generators.size() == 2);
  CHECK(p.generators[0] == PartialConjugation{g.at("a"), vs(g, "c")});
  CHECK(p.generators[1] == PartialConjugation{g.at("c"), vs(g, "a")});
  CHECK(p.relators.empty());
  CHECK(format_generator(g, p.generators[0]) == "c{c}^a");

  for (std::size_t n = 2; n <= 6; ++n)
    CHECK(paut_presentation(Graph::discrete(n)).generators.size() == n * (n - 1));
}

TEST_CASE("presentations are canonical") {
  for (const auto& g : testing::all_graphs_up_to(4)) {
    auto p = paut_presentation(g);
    CHECK(std::is_sorted(p.generators.begin(), p.generators.end(), generator_less));
    CHECK(std::is_sorted(p.relators.begin(), p.relators.end(), relator_less));
    for (std::size_t i = 1; i < p.relators.size(); ++i)
      CHECK_FALSE(p.relators[i - 1] == p.relators[i]);
    for (const auto& r : p.relators)
      for (const auto& l : r.word()) CHECK(l.gen < p.generators.size());
  }
}

TEST_CASE("POut presentations") {
  auto d3 = pout_presentation(Graph::discrete(3));
  CHECK(d3.kind == PresentationKind::POut);
  CHECK(d3.relators.size() == 12);
  CHECK(count_shape(d3, Relator::Shape::Product, 2) == 3);

  auto g = make_graph("abc", "ab bc");
  auto p = pout_presentation(g);
  REQUIRE(p.relators.size() == 2);
  for (const auto& r : p.relators) {
    CHECK(r.shape == Relator::Shape::Product);
    CHECK(r.left.size() == 1);
  }

  auto k3 = pout_presentation(Graph::complete(3));
  CHECK(k3.generators.empty());
  CHECK(k3.relators.empty());
}

TEST_CASE("omega validation") {
  auto d = Graph::discrete(3);
  // Ω^0 must cover {1,2}
  CHECK_THROWS_AS(OmegaPartition(d, {{VertexSet::singleton(1)},
                                     {VertexSet::singleton(0), VertexSet::singleton(2)},
                                     {VertexSet::singleton(0), VertexSet::singleton(1)}}),
                  ValidationError);
  // path a-b-c-d: {c} alone is not a union of components of Γ∖st(a) = {c,d}
  auto p = Graph::path(4);
  auto o = standard_omega(p).all();
  o[0] = {VertexSet::singleton(2), VertexSet::singleton(3)};
  CHECK_THROWS_WITH_AS(OmegaPartition(p, o), doctest::Contains("{2}"), ValidationError);
  CHECK_THROWS_AS(paut_like_presentation(p, OmegaPartition::unchecked(o)), ValidationError);

  // on the discrete 4-vertex graph, Ω^0 = {{1},{2,3}} makes {2,3} neither
  // dominant, shared nor subordinate for the pair (0,1)
  auto d4 = Graph::discrete(4);
  auto bad = standard_omega(d4).all();
  bad[0] = {VertexSet::singleton(1), VertexSet::from_bits(0b1100)};
  CHECK_THROWS_WITH_AS(OmegaPartition(d4, bad), doctest::Contains("{2,3}"), ValidationError);

  // merging every Ω^v on the discrete graph keeps it valid: each block is dominant
  std::vector<std::vector<VertexSet>> merged(3);
  for (Vertex v = 0; v < 3; ++v) merged[v] = {d.vertices() - VertexSet::singleton(v)};
  OmegaPartition ok(d, merged);
  auto pl = paut_like_presentation(d, ok);
  CHECK(pl.kind == PresentationKind::PAutLike);
  CHECK(pl.generators.size() == 3);
}

TEST_CASE("Koban-Piggott shape on graphs up to 5 vertices") {
  for (const auto& g : testing::all_graphs_up_to(5))
    CHECK(is_raag_shaped(paut_presentation(g)) == find_sil_pairs(g).empty());
  CHECK(is_raag_shaped(GroupPresentation{PresentationKind::PAut, {}, {}}));
  CHECK(is_raag_shaped(paut_presentation(Graph::path(3))));
  CHECK_FALSE(is_raag_shaped(paut_presentation(Graph::discrete(3))));
}

TEST_CASE("omega split examples") {
  auto d3 = Graph::discrete(3);
  auto s = omega_split(d3, standard_omega(d3), VertexSet::from_bits(0b011));
  CHECK(s.p_blocks[0] == std::vector<VertexSet>{VertexSet::singleton(1)});
  auto h0 = s.kernel.of(0);
  CHECK(std::set<std::uint64_t>{h0[0].bits(), h0[1].bits()} ==
        std::set<std::uint64_t>{0b010, 0b100});
  CHECK(s.kernel.of(2) == standard_omega(d3).of(2));
  CHECK(s.quotient_graph.size() == 2);

  auto d4 = Graph::discrete(4);
  s = omega_split(d4, standard_omega(d4), VertexSet::from_bits(0b0111));
  CHECK(s.p_blocks[0] == std::vector<VertexSet>{VertexSet::singleton(1), VertexSet::singleton(2)});
  h0 = s.kernel.of(0);
  REQUIRE(h0.size() == 2);
  CHECK(std::set<std::uint64_t>{h0[0].bits(), h0[1].bits()} ==
        std::set<std::uint64_t>{0b1000, 0b0110});

  for (Vertex v = 0; v < 4; ++v)
    CHECK_THROWS_AS(omega_split(d4, standard_omega(d4), VertexSet::singleton(v)), DomainError);
  CHECK_THROWS_AS(omega_split(d4, standard_omega(d4), d4.vertices()), InputError);
  CHECK_THROWS_AS(omega_split(d4, standard_omega(d4), VertexSet{}), InputError);
}

TEST_CASE("omega split outputs stay valid and keep block roles") {
  std::size_t preserved_cases = 0;
  for (const auto& g : testing::all_graphs_up_to(5)) {
    const auto omega = standard_omega(g);
    const std::uint64_t full = g.vertices().bits();
    for (std::uint64_t bits = 1; bits < full; ++bits) {
      const VertexSet delta = VertexSet::from_bits(bits);
      bool assumption = true;
      for (Vertex v : delta)
        if (delta.subset_of(g.star(v))) assumption = false;
      if (!assumption) {
        CHECK_THROWS_AS(omega_split(g, omega, delta), DomainError);
        continue;
      }
      auto s = omega_split(g, omega, delta);
      bool preserved = true;
      for (Vertex v = 0; v < g.size(); ++v)
        for (VertexSet a : omega.of(v))
          if (!pc_action_on_special(g, {v, a}, delta).preserves) preserved = false;
      if (!preserved) continue;
      ++preserved_cases;
      CHECK_NOTHROW(validate_omega(g, s.kernel));
      CHECK_NOTHROW(validate_omega(s.quotient_graph, s.quotient));
      // roles of Ω_P blocks survive intersection with Δ
      const auto members = delta.to_vector();
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
          const Vertex v = members[i], w = members[j];
          if (v == w || g.adjacent(v, w)) continue;
          for (VertexSet a : s.p_blocks[v]) {
            const auto r = block_role(omega, v, w, a);
            const auto rq = block_role(s.quotient, static_cast<Vertex>(i),
                                       static_cast<Vertex>(j), restrict_to(delta, a & delta));
            CHECK(r != BlockRole::Other);
            CHECK(r == rq);
          }
        }
    }
  }
  CHECK(preserved_cases > 100);
}

TEST_CASE("relators act as the identity on A_Γ up to 4 vertices") {
  for (const auto& g : testing::all_graphs_up_to(4)) {
    auto paut = paut_presentation(g);
    for (const auto& r : paut.relators)
      CHECK(testing::acts_as_identity(g, testing::relator_images(g, paut, r.word())));
    auto pout = pout_presentation(g);
    for (const auto& r : pout.relators) {
      auto images = testing::relator_images(g, pout, r.word());
      if (r.shape == Relator::Shape::Commutator) {
        CHECK(testing::acts_as_identity(g, images));
      } else {
        const Vertex actor = pout.generators[r.left.front()].actor;
        CHECK(testing::acts_as_conjugation(g, images, {{actor, 1}}));
      }
    }
  }
}

TEST_CASE("word oracle sanity") {
  auto g = Graph::path(3);
  using testing::GWord;
  CHECK(testing::reduce_word(g, GWord{{0, 1}, {1, 1}, {0, -1}}) == GWord{{1, 1}});
  CHECK(testing::reduce_word(g, GWord{{0, 1}, {2, 1}, {0, -1}}).size() == 3);
  // a non-relation is detected: c_{1}^0 is not the identity on the discrete graph
  auto d = Graph::discrete(2);
  auto p = paut_presentation(d);
  CHECK_FALSE(testing::acts_as_identity(d, testing::relator_images(d, p, {{0, 1}})));
}
