#include "raag/presentation.hpp"

#include <algorithm>

#include "raag/errors.hpp"
#include "raag/graph_core.hpp"

namespace raag {

bool generator_less(const PartialConjugation& a, const PartialConjugation& b) {
  if (a.actor != b.actor) return a.actor < b.actor;
  return canonical_less(a.base, b.base);
}

std::string format_generator(const Graph& g, const PartialConjugation& c) {
  return "c" + g.format(c.base) + "^" + g.name(c.actor);
}

GroupWord Relator::word() const {
  GroupWord w;
  if (shape == Shape::Product) {
    for (auto i : left) w.push_back({i, 1});
    return w;
  }
  for (auto it = left.rbegin(); it != left.rend(); ++it) w.push_back({*it, -1});
  for (auto it = right.rbegin(); it != right.rend(); ++it)
    w.push_back({*it, -1});
  for (auto i : left) w.push_back({i, 1});
  for (auto i : right) w.push_back({i, 1});
  return w;
}

bool relator_less(const Relator& a, const Relator& b) {
  if (a.shape != b.shape) return a.shape < b.shape;
  if (a.left != b.left) return a.left < b.left;
  return a.right < b.right;
}

const char* to_string(PresentationKind k) {
  switch (k) {
    case PresentationKind::PAut:
      return "paut";
    case PresentationKind::POut:
      return "pout";
    case PresentationKind::PAutLike:
      return "paut-like";
  }
  return "?";
}

std::optional<std::uint32_t> GroupPresentation::index_of(
    const PartialConjugation& c) const {
  for (std::uint32_t i = 0; i < generators.size(); ++i)
    if (generators[i] == c) return i;
  return std::nullopt;
}

namespace {

std::vector<std::vector<VertexSet>> sorted(std::vector<std::vector<VertexSet>> b) {
  for (auto& list : b) std::sort(list.begin(), list.end(), CanonicalLess{});
  return b;
}

bool is_block(const std::vector<VertexSet>& list, VertexSet a) {
  return std::find(list.begin(), list.end(), a) != list.end();
}

}  // namespace

OmegaPartition::OmegaPartition(const Graph& g,
                               std::vector<std::vector<VertexSet>> blocks)
    : blocks_(sorted(std::move(blocks))) {
  validate_omega(g, *this);
}

OmegaPartition OmegaPartition::unchecked(
    std::vector<std::vector<VertexSet>> blocks) {
  OmegaPartition o;
  o.blocks_ = sorted(std::move(blocks));
  return o;
}

std::size_t OmegaPartition::block_count() const {
  std::size_t n = 0;
  for (const auto& l : blocks_) n += l.size();
  return n;
}

std::optional<VertexSet> OmegaPartition::block_containing(Vertex v,
                                                          Vertex u) const {
  for (auto a : blocks_.at(v))
    if (a.contains(u)) return a;
  return std::nullopt;
}

BlockRole block_role(const OmegaPartition& omega, Vertex v, Vertex w,
                     VertexSet a) {
  if (a.contains(w)) return BlockRole::Dominant;
  if (is_block(omega.of(w), a)) return BlockRole::Shared;
  if (auto dom = omega.block_containing(w, v); dom && a.subset_of(*dom))
    return BlockRole::Subordinate;
  return BlockRole::Other;
}

void validate_omega(const Graph& g, const OmegaPartition& omega) {
  if (omega.vertex_count() != g.size())
    throw ValidationError("partition covers " +
                          std::to_string(omega.vertex_count()) +
                          " vertices, graph has " + std::to_string(g.size()));
  for (Vertex v = 0; v < g.size(); ++v) {
    const VertexSet target = g.vertices() - g.star(v);
    const auto comps = star_complement_components(g, v);
    VertexSet seen;
    for (auto a : omega.of(v)) {
      const std::string where = "block " + g.format(a) + " of vertex '" +
                                g.name(v) + "'";
      if (a.empty()) throw ValidationError(where + " is empty");
      if (!a.subset_of(target))
        throw ValidationError(where + " meets the star of its vertex");
      if (a.intersects(seen))
        throw ValidationError(where + " overlaps another block");
      seen |= a;
      for (auto c : comps)
        if (c.intersects(a) && !c.subset_of(a))
          throw ValidationError(where +
                                " is not a union of connected components");
    }
    if (seen != target)
      throw ValidationError("blocks of vertex '" + g.name(v) +
                            "' do not cover " + g.format(target));
  }
  for (Vertex v = 0; v < g.size(); ++v)
    for (Vertex w = 0; w < g.size(); ++w) {
      if (v == w || g.adjacent(v, w)) continue;
      for (auto a : omega.of(v))
        if (block_role(omega, v, w, a) == BlockRole::Other)
          throw ValidationError(
              "block " + g.format(a) + " of vertex '" + g.name(v) +
              "' is neither dominant, shared nor subordinate relative to '" +
              g.name(w) + "'");
    }
}

OmegaPartition standard_omega(const Graph& g) {
  std::vector<std::vector<VertexSet>> blocks(g.size());
  for (Vertex v = 0; v < g.size(); ++v)
    blocks[v] = star_complement_components(g, v);
  return OmegaPartition::unchecked(std::move(blocks));
}

GroupPresentation paut_like_presentation(const Graph& g,
                                         const OmegaPartition& omega) {
  validate_omega(g, omega);
  GroupPresentation p;
  p.kind = omega == standard_omega(g) ? PresentationKind::PAut
                                      : PresentationKind::PAutLike;
  for (Vertex v = 0; v < g.size(); ++v)
    for (auto a : omega.of(v)) p.generators.push_back({v, a});
  std::sort(p.generators.begin(), p.generators.end(), generator_less);

  auto gen = [&](Vertex v, VertexSet a) { return *p.index_of({v, a}); };
  std::vector<Relator> rels;
  auto commutator = [&](std::vector<std::uint32_t> x,
                        std::vector<std::uint32_t> y) {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (y < x) std::swap(x, y);
    rels.push_back({Relator::Shape::Commutator, std::move(x), std::move(y)});
  };

  for (Vertex v = 0; v < g.size(); ++v)
    for (Vertex w = v; w < g.size(); ++w) {
      const auto& ov = omega.of(v);
      const auto& ow = omega.of(w);
      if (v == w) {
        for (std::size_t i = 0; i < ov.size(); ++i)
          for (std::size_t j = i + 1; j < ov.size(); ++j)
            commutator({gen(v, ov[i])}, {gen(v, ov[j])});
        continue;
      }
      if (g.adjacent(v, w)) {
        for (auto a : ov)
          for (auto b : ow) commutator({gen(v, a)}, {gen(w, b)});
        continue;
      }
      for (auto a : ov)
        for (auto b : ow) {
          const auto ra = block_role(omega, v, w, a);
          const auto rb = block_role(omega, w, v, b);
          const bool sub =
              ra == BlockRole::Subordinate || rb == BlockRole::Subordinate;
          const bool two_shared =
              ra == BlockRole::Shared && rb == BlockRole::Shared && a != b;
          if (sub || two_shared) commutator({gen(v, a)}, {gen(w, b)});
        }
      const VertexSet dom_w = *omega.block_containing(w, v);  // D_v^w
      const VertexSet dom_v = *omega.block_containing(v, w);  // D_w^v
      for (auto a : ov) {
        if (block_role(omega, v, w, a) != BlockRole::Shared) continue;
        commutator({gen(v, a)}, {gen(w, a), gen(w, dom_w)});
        commutator({gen(v, a), gen(v, dom_v)}, {gen(w, a)});
      }
    }
  std::sort(rels.begin(), rels.end(), relator_less);
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  p.relators = std::move(rels);
  return p;
}

GroupPresentation paut_presentation(const Graph& g) {
  return paut_like_presentation(g, standard_omega(g));
}

GroupPresentation pout_presentation(const Graph& g,
                                    const OmegaPartition& omega) {
  GroupPresentation p = paut_like_presentation(g, omega);
  p.kind = PresentationKind::POut;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (omega.of(v).empty()) continue;
    Relator r{Relator::Shape::Product, {}, {}};
    for (auto a : omega.of(v)) r.left.push_back(*p.index_of({v, a}));
    std::sort(r.left.begin(), r.left.end());
    p.relators.push_back(std::move(r));
  }
  return p;
}

GroupPresentation pout_presentation(const Graph& g) {
  return pout_presentation(g, standard_omega(g));
}

OmegaSplit omega_split(const Graph& g, const OmegaPartition& omega,
                       VertexSet delta) {
  if (!g.contains(delta))
    throw InputError("subset " + std::to_string(delta.bits()) +
                     " is not a vertex set of the graph");
  if (delta.empty() || delta == g.vertices())
    throw InputError("subgraph " + g.format(delta) +
                     " is not a proper nonempty subgraph");
  for (Vertex v : delta)
    if (delta.subset_of(g.star(v)))
      throw DomainError("vertex '" + g.name(v) + "' is linked to all of " +
                        g.format(delta) +
                        "; the split needs no vertex of the subgraph whose "
                        "star contains it");

  OmegaSplit out;
  out.delta = delta;
  out.p_blocks.assign(g.size(), {});
  std::vector<std::vector<VertexSet>> kernel(g.size());
  std::vector<std::vector<VertexSet>> quotient(delta.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!delta.contains(v)) {
      kernel[v] = omega.of(v);
      continue;
    }
    VertexSet s;
    for (auto a : omega.of(v)) {
      if (a.intersects(delta)) {
        out.p_blocks[v].push_back(a);
        s |= a;
        quotient[restrict_to(delta, VertexSet::singleton(v)).least()]
            .push_back(restrict_to(delta, a & delta));
      } else {
        kernel[v].push_back(a);
      }
    }
    kernel[v].push_back(s);
    std::sort(out.p_blocks[v].begin(), out.p_blocks[v].end(), CanonicalLess{});
  }
  // Both families satisfy the partition invariants once every c_A^v carried
  // by omega preserves delta; for other subsets they are only the raw
  // construction, so validation is left to the caller.
  out.kernel = OmegaPartition::unchecked(std::move(kernel));
  out.quotient_graph = g.induced(delta);
  out.quotient = OmegaPartition::unchecked(std::move(quotient));
  return out;
}

bool is_raag_shaped(const GroupPresentation& p) {
  for (const auto& r : p.relators)
    if (r.shape != Relator::Shape::Commutator || r.left.size() != 1 ||
        r.right.size() != 1)
      return false;
  return true;
}

}  // namespace raag
