#include "raag/graph_core.hpp"

#include <algorithm>

#include "raag/errors.hpp"

namespace raag {

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.size())
    throw InputError("unknown vertex index " + std::to_string(v));
}

const ClassifiedComponent* find_holding(const std::vector<ClassifiedComponent>& side,
                                        Vertex u) {
  for (const auto& c : side)
    if (c.component.contains(u)) return &c;
  return nullptr;
}

void count_cliques(const Graph& g, VertexSet clique, VertexSet candidates,
                   std::vector<long long>& counts) {
  const std::size_t k = clique.size();
  if (counts.size() <= k) counts.resize(k + 1, 0);
  ++counts[k];
  for (Vertex u : candidates) {
    // Only extend by vertices larger than u afterwards to avoid repeats.
    VertexSet rest = candidates & g.link(u);
    rest -= VertexSet::first(u + 1);
    count_cliques(g, clique | VertexSet::singleton(u), rest, counts);
  }
}

}  // namespace

Neighborhood neighborhood(const Graph& g, Vertex v) {
  require_vertex(g, v);
  return {g.link(v), g.star(v)};
}

std::vector<VertexSet> induced_components(const Graph& g, VertexSet s) {
  if (!g.contains(s))
    throw InputError("vertex set " + std::to_string(s.bits()) +
                     " is not a subset of the graph");
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp = VertexSet::singleton(left.least());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex u : frontier) next |= g.link(u) & left;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

std::vector<VertexSet> star_complement_components(const Graph& g, Vertex v) {
  require_vertex(g, v);
  return induced_components(g, g.vertices() - g.star(v));
}

const char* to_string(ComponentClass::Tag t) {
  switch (t) {
    case ComponentClass::Tag::Dominant:
      return "dominant";
    case ComponentClass::Tag::Subordinate:
      return "subordinate";
    case ComponentClass::Tag::Shared:
      return "shared";
  }
  return "?";
}

std::vector<VertexSet> PairClassification::shared() const {
  std::vector<VertexSet> out;
  for (const auto& c : v_side)
    if (c.cls.tag == ComponentClass::Tag::Shared) out.push_back(c.component);
  return out;
}

PairClassification classify_components(const Graph& g, Vertex v, Vertex w) {
  require_vertex(g, v);
  require_vertex(g, w);
  if (v == w)
    throw DomainError("classification needs two distinct vertices, got '" +
                      g.name(v) + "' twice");
  if (g.adjacent(v, w))
    throw DomainError("vertices '" + g.name(v) + "' and '" + g.name(w) +
                      "' are adjacent; classification is undefined");

  const auto v_comps = star_complement_components(g, v);
  const auto w_comps = star_complement_components(g, w);

  auto classify_side = [&](const std::vector<VertexSet>& mine,
                           const std::vector<VertexSet>& theirs, Vertex other,
                           Vertex self) {
    VertexSet their_dominant;
    for (auto c : theirs)
      if (c.contains(self)) their_dominant = c;
    std::vector<ClassifiedComponent> side;
    for (auto c : mine) {
      ComponentClass cls;
      if (c.contains(other)) {
        cls = {ComponentClass::Tag::Dominant, other};
      } else if (std::find(theirs.begin(), theirs.end(), c) != theirs.end()) {
        cls = {ComponentClass::Tag::Shared, std::nullopt};
      } else if (c.subset_of(their_dominant)) {
        cls = {ComponentClass::Tag::Subordinate, std::nullopt};
      } else {
        throw InternalError("component " + g.format(c) +
                            " is neither dominant, shared nor subordinate");
      }
      side.push_back({c, cls});
    }
    return side;
  };

  PairClassification out{v, w, {}, {}};
  out.v_side = classify_side(v_comps, w_comps, w, v);
  out.w_side = classify_side(w_comps, v_comps, v, w);
  if (!find_holding(out.v_side, w) || !find_holding(out.w_side, v))
    throw InternalError("missing dominant component");
  return out;
}

std::vector<SilPair> find_sil_pairs(const Graph& g) {
  std::vector<SilPair> out;
  for (Vertex v = 0; v < g.size(); ++v)
    for (Vertex w = v + 1; w < g.size(); ++w) {
      if (g.adjacent(v, w)) continue;
      auto shared = classify_components(g, v, w).shared();
      if (!shared.empty()) out.push_back({v, w, std::move(shared)});
    }
  return out;
}

StarCondition check_star_condition(const Graph& g) {
  const auto n = static_cast<Vertex>(g.size());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
        for (Vertex d = c + 1; d < n; ++d) {
          if (g.adjacent(a, d) || g.adjacent(b, d) || g.adjacent(c, d))
            continue;
          const VertexSet common = g.link(a) & g.link(b) & g.link(c) & g.link(d);
          const auto comps = induced_components(g, g.vertices() - common);
          const std::array<Vertex, 4> quad{a, b, c, d};
          std::vector<VertexSet> hit;
          for (Vertex u : quad)
            for (auto comp : comps)
              if (comp.contains(u) &&
                  std::find(hit.begin(), hit.end(), comp) == hit.end())
                hit.push_back(comp);
          if (hit.size() == 4) return {false, quad};
        }
      }
    }
  return {true, std::nullopt};
}

std::vector<long long> clique_polynomial(const Graph& g) {
  std::vector<long long> counts;
  count_cliques(g, VertexSet{}, g.vertices(), counts);
  return counts;
}

}  // namespace raag
