#include <doctest.h>

#include "raag/errors.hpp"
#include "raag/graph_core.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

using namespace raag;
using testing::make_graph;
using testing::vs;

TEST_CASE("neighborhood") {
  auto e = make_graph("ab", "ab");
  auto n = neighborhood(e, e.at("a"));
  CHECK(n.link == vs(e, "b"));
  CHECK(n.star == vs(e, "ab"));

  auto d = make_graph("ab", "");
  n = neighborhood(d, d.at("a"));
  CHECK(n.link.empty());
  CHECK(n.star == vs(d, "a"));

  auto p = make_graph("abc", "ab bc");
  n = neighborhood(p, p.at("b"));
  CHECK(n.link == vs(p, "ac"));
  CHECK(n.star == vs(p, "abc"));

  CHECK_THROWS_AS(p.at("z"), InputError);
  CHECK_THROWS_WITH_AS(neighborhood(p, 7), doctest::Contains("7"), InputError);
}

TEST_CASE("induced components") {
  auto p = make_graph("abc", "ab bc");
  auto c = induced_components(p, vs(p, "ac"));
  REQUIRE(c.size() == 2);
  CHECK(c[0] == vs(p, "a"));
  CHECK(c[1] == vs(p, "c"));

  auto p4 = make_graph("abcd", "ab bc cd");
  CHECK(star_complement_components(p4, p4.at("a")) ==
        std::vector<VertexSet>{vs(p4, "cd")});

  auto d4 = Graph::discrete(4);
  auto s = induced_components(d4, d4.vertices());
  REQUIRE(s.size() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(s[v] == VertexSet::singleton(v));

  CHECK_THROWS_AS(induced_components(d4, VertexSet::singleton(9)), InputError);
}

TEST_CASE("classify components: examples") {
  auto d = make_graph("uvw", "");
  auto pc = classify_components(d, d.at("v"), d.at("w"));
  REQUIRE(pc.v_side.size() == 2);
  CHECK(pc.v_side[0].component == vs(d, "u"));
  CHECK(pc.v_side[0].cls.tag == ComponentClass::Tag::Shared);
  CHECK(pc.v_side[1].component == vs(d, "w"));
  CHECK(pc.v_side[1].cls.tag == ComponentClass::Tag::Dominant);
  CHECK(pc.v_side[1].cls.contains == d.at("w"));
  CHECK(pc.shared() == std::vector<VertexSet>{vs(d, "u")});

  auto p = make_graph("abc", "ab bc");
  pc = classify_components(p, p.at("a"), p.at("c"));
  REQUIRE(pc.v_side.size() == 1);
  REQUIRE(pc.w_side.size() == 1);
  CHECK(pc.v_side[0].component == vs(p, "c"));
  CHECK(pc.v_side[0].cls.tag == ComponentClass::Tag::Dominant);
  CHECK(pc.w_side[0].component == vs(p, "a"));
  CHECK(pc.w_side[0].cls.tag == ComponentClass::Tag::Dominant);

  auto g = make_graph("umwv", "um mw");
  pc = classify_components(g, g.at("w"), g.at("v"));
  bool found = false;
  for (const auto& c : pc.v_side)
    if (c.component == vs(g, "u")) {
      found = true;
      CHECK(c.cls.tag == ComponentClass::Tag::Subordinate);
    }
  CHECK(found);

  CHECK_THROWS_AS(classify_components(p, p.at("a"), p.at("b")), DomainError);
  CHECK_THROWS_AS(classify_components(p, p.at("a"), p.at("a")), DomainError);
}

TEST_CASE("classification is total and consistent on graphs up to 6 vertices") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& g : testing::all_graphs(n)) {
      bool any_shared = false;
      for (Vertex v = 0; v < n; ++v)
        for (Vertex w = 0; w < n; ++w) {
          if (v == w || g.adjacent(v, w)) continue;
          auto pc = classify_components(g, v, w);
          auto dominant_on = [](const std::vector<ClassifiedComponent>& side) {
            for (const auto& c : side)
              if (c.cls.tag == ComponentClass::Tag::Dominant) return c.component;
            return VertexSet{};
          };
          const VertexSet dv = dominant_on(pc.v_side);  // holds w
          const VertexSet dw = dominant_on(pc.w_side);  // holds v
          REQUIRE(dv.contains(w));
          REQUIRE(dw.contains(v));
          VertexSet covered;
          for (const auto& c : pc.v_side) {
            CHECK_FALSE(covered.intersects(c.component));
            covered |= c.component;
            if (c.cls.tag == ComponentClass::Tag::Subordinate) {
              CHECK(c.component.subset_of(dw));
              CHECK(c.component != dw);
            }
            if (c.cls.tag == ComponentClass::Tag::Shared) {
              any_shared = true;
              CHECK_FALSE(c.component.contains(v));
              CHECK_FALSE(c.component.contains(w));
            }
          }
          CHECK(covered == g.vertices() - g.star(v));
          for (const auto& c : pc.w_side)
            if (c.cls.tag == ComponentClass::Tag::Subordinate) CHECK(c.component.subset_of(dv));
        }
      CHECK(find_sil_pairs(g).empty() == !any_shared);
    }
}

TEST_CASE("SIL pairs") {
  auto d = Graph::discrete(3);
  auto sil = find_sil_pairs(d);
  REQUIRE(sil.size() == 3);
  for (const auto& p : sil) {
    REQUIRE(p.shared.size() == 1);
    CHECK(p.shared[0] == d.vertices() - VertexSet::singleton(p.v) - VertexSet::singleton(p.w));
  }
  CHECK(find_sil_pairs(Graph::complete(4)).empty());
  CHECK(find_sil_pairs(make_graph("abc", "ab bc")).empty());
}

TEST_CASE("star condition") {
  auto d4 = Graph::discrete(4);
  auto s = check_star_condition(d4);
  CHECK_FALSE(s.holds);
  REQUIRE(s.witness);
  CHECK(*s.witness == std::array<Vertex, 4>{0, 1, 2, 3});

  s = check_star_condition(Graph::discrete(3));
  CHECK(s.holds);
  CHECK_FALSE(s.witness);

  auto k14 = Graph::star_graph(4);
  s = check_star_condition(k14);
  CHECK_FALSE(s.holds);
  REQUIRE(s.witness);
  CHECK(*s.witness == std::array<Vertex, 4>{1, 2, 3, 4});

  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& g : testing::all_graphs(n)) CHECK(check_star_condition(g).holds);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(check_star_condition(Graph::complete(n)).holds);
  for (std::size_t n = 4; n <= 5; ++n)
    for (const auto& g : testing::all_graphs(n))
      CHECK(check_star_condition(g).holds == testing::star_condition_brute(g));
}

TEST_CASE("clique polynomial") {
  CHECK(clique_polynomial(Graph::complete(2)) == std::vector<long long>{1, 2, 1});
  CHECK(clique_polynomial(Graph::discrete(5)) == std::vector<long long>{1, 5});
  CHECK(clique_polynomial(Graph::path(3)) == std::vector<long long>{1, 3, 2});
  CHECK(clique_polynomial(Graph::complete(4)) == std::vector<long long>{1, 4, 6, 4, 1});

  // additive over disjoint unions
  auto gs = testing::all_graphs_up_to(3);
  for (const auto& a : gs)
    for (const auto& b : gs) {
      auto ca = clique_polynomial(a), cb = clique_polynomial(b);
      auto cu = clique_polynomial(a.disjoint_union(b));
      REQUIRE(cu.size() == std::max(ca.size(), cb.size()));
      for (std::size_t k = 1; k < cu.size(); ++k)
        CHECK(cu[k] == (k < ca.size() ? ca[k] : 0) + (k < cb.size() ? cb[k] : 0));
    }
}
