#include "raag/day_wade.hpp"

#include <algorithm>
#include <numeric>

#include "raag/errors.hpp"
#include "raag/graph_core.hpp"

namespace raag {

namespace {

std::vector<VertexSet> canonical(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end(), CanonicalLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool preserves(const Graph& g, const PartialConjugation& c, VertexSet d) {
  return d.contains(c.actor) || !c.base.intersects(d) ||
         (d - g.star(c.actor)).subset_of(c.base);
}

bool acts_trivially(const Graph& g, const PartialConjugation& c, VertexSet d) {
  return !c.base.intersects(d) || (d - g.star(c.actor)).subset_of(c.base);
}

std::vector<PartialConjugation> generators_of(const OmegaPartition& omega) {
  std::vector<PartialConjugation> gens;
  for (Vertex v = 0; v < omega.vertex_count(); ++v)
    for (auto a : omega.of(v)) gens.push_back({v, a});
  return gens;
}

long long omega_rank_of(const OmegaPartition& omega) {
  long long r = 0;
  for (const auto& blocks : omega.all())
    if (!blocks.empty()) r += static_cast<long long>(blocks.size()) - 1;
  return r;
}

// Restriction of a family to Δ in Δ coordinates, dropping empty sets and Δ.
SpecialFamily restrict_family(const SpecialFamily& fam, VertexSet delta) {
  std::vector<VertexSet> out;
  for (auto m : fam.members()) {
    const VertexSet x = m & delta;
    if (x.empty() || x == delta) continue;
    out.push_back(restrict_to(delta, x));
  }
  return SpecialFamily::unchecked(std::move(out));
}

std::size_t trivially_acted_count(const Graph& g,
                                  const std::vector<PartialConjugation>& gens) {
  const std::uint64_t total = std::uint64_t{1} << g.size();
  std::size_t count = 0;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const auto s = VertexSet::from_bits(bits);
    bool ok = true;
    for (const auto& c : gens)
      if (!acts_trivially(g, c, s)) {
        ok = false;
        break;
      }
    count += ok;
  }
  return count;
}

}  // namespace

SpecialFamily::SpecialFamily(const Graph& g, std::vector<VertexSet> members) {
  for (auto m : members) {
    if (m.empty()) throw InputError("special family member is empty");
    if (!g.contains(m))
      throw InputError("special family member is not a vertex set of the graph");
    if (m == g.vertices())
      throw InputError("special family member " + g.format(m) +
                       " is not proper");
  }
  members_ = canonical(std::move(members));
}

SpecialFamily SpecialFamily::unchecked(std::vector<VertexSet> members) {
  SpecialFamily f;
  f.members_ = canonical(std::move(members));
  return f;
}

bool SpecialFamily::contains(VertexSet s) const {
  return std::find(members_.begin(), members_.end(), s) != members_.end();
}

SpecialFamily SpecialFamily::with(VertexSet s) const {
  auto m = members_;
  m.push_back(s);
  return unchecked(std::move(m));
}

PcAction pc_action_on_special(const Graph& g, const PartialConjugation& c,
                              VertexSet delta) {
  if (delta.empty() || !g.contains(delta) || delta == g.vertices())
    throw InputError("subgraph must be a proper nonempty vertex set");
  if (c.actor >= g.size()) throw InputError("unknown acting vertex");
  if (c.base.empty() || !g.contains(c.base) ||
      c.base.intersects(g.star(c.actor)))
    throw InputError("base of " + format_generator(g, c) +
                     " must be nonempty and avoid the star of its vertex");
  for (auto comp : star_complement_components(g, c.actor))
    if (comp.intersects(c.base) && !comp.subset_of(c.base))
      throw InputError("base of " + format_generator(g, c) +
                       " is not a union of components");
  return {preserves(g, c, delta), acts_trivially(g, c, delta)};
}

OmegaPartition relative_atoms(const Graph& g, const SpecialFamily& G,
                              const SpecialFamily& H) {
  std::vector<std::vector<VertexSet>> blocks(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto comps = star_complement_components(g, v);
    UnionFind uf(comps.size());
    // A constraint glues together every component meeting the subgraph.
    auto glue = [&](VertexSet d) {
      std::optional<std::size_t> first;
      for (std::size_t i = 0; i < comps.size(); ++i)
        if (comps[i].intersects(d)) {
          if (first)
            uf.unite(i, *first);
          else
            first = i;
        }
    };
    for (auto d : H.members()) glue(d);
    for (auto d : G.members())
      if (!d.contains(v)) glue(d);
    std::vector<VertexSet> merged(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) merged[uf.find(i)] |= comps[i];
    for (auto m : merged)
      if (!m.empty()) blocks[v].push_back(m);
  }
  return OmegaPartition::unchecked(std::move(blocks));
}

std::vector<RelativeConjugation> relative_partial_conjugations(
    const Graph& g, const SpecialFamily& G, const SpecialFamily& H) {
  const OmegaPartition atoms = relative_atoms(g, G, H);
  std::vector<RelativeConjugation> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto& a = atoms.of(v);
    if (a.size() > 20)
      throw ResourceError("vertex '" + g.name(v) + "' has " +
                          std::to_string(a.size()) +
                          " admissible blocks; too many unions to list");
    std::vector<PartialConjugation> here;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << a.size()); ++mask) {
      VertexSet base;
      for (std::size_t i = 0; i < a.size(); ++i)
        if ((mask >> i) & 1U) base |= a[i];
      here.push_back({v, base});
    }
    std::sort(here.begin(), here.end(), generator_less);
    for (const auto& c : here)
      out.push_back({c, std::find(a.begin(), a.end(), c.base) != a.end()});
  }
  return out;
}

SpecialFamily saturate_with(const Graph& g, const SpecialFamily& G,
                            const std::vector<PartialConjugation>& gens,
                            std::size_t vertex_cap) {
  if (g.size() > vertex_cap)
    throw ResourceError("saturation enumerates all subgraphs; " +
                        std::to_string(g.size()) + " vertices exceed the cap of " +
                        std::to_string(vertex_cap));
  std::vector<VertexSet> members = G.members();
  const std::uint64_t full = g.vertices().bits();
  for (std::uint64_t bits = 1; bits < full; ++bits) {
    const auto s = VertexSet::from_bits(bits);
    bool ok = true;
    for (const auto& c : gens)
      if (!preserves(g, c, s)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(s);
  }
  return SpecialFamily::unchecked(std::move(members));
}

SpecialFamily saturate(const Graph& g, const SpecialFamily& G,
                       const SpecialFamily& H, std::size_t vertex_cap) {
  if (g.size() > vertex_cap)
    throw ResourceError("saturation enumerates all subgraphs; " +
                        std::to_string(g.size()) + " vertices exceed the cap of " +
                        std::to_string(vertex_cap));
  // Unions of atoms preserve whatever the atoms preserve.
  return saturate_with(g, G, generators_of(relative_atoms(g, G, H)), vertex_cap);
}

std::vector<VertexSet> g_components(const Graph& g, const SpecialFamily& fam,
                                    VertexSet s) {
  if (!g.contains(s)) throw InputError("vertex set is not a subset of the graph");
  UnionFind uf(g.size());
  for (auto [a, b] : g.edges())
    if (s.contains(a) && s.contains(b)) uf.unite(a, b);
  for (auto m : fam.members()) {
    const VertexSet x = m & s;
    if (x.size() < 2) continue;
    for (Vertex u : x) uf.unite(u, x.least());
  }
  std::vector<VertexSet> comps(g.size());
  for (Vertex u : s) comps[uf.find(u)].insert(u);
  std::vector<VertexSet> out;
  for (auto c : comps)
    if (!c.empty()) out.push_back(c);
  std::sort(out.begin(), out.end(),
            [](VertexSet a, VertexSet b) { return a.least() < b.least(); });
  return out;
}

VertexSet center_of(const Graph& g, VertexSet s) {
  VertexSet z;
  for (Vertex v : s)
    if (s.subset_of(g.star(v))) z.insert(v);
  return z;
}

const char* to_string(DecompositionNode::Kind k) {
  using K = DecompositionNode::Kind;
  switch (k) {
    case K::Split:
      return "split";
    case K::CenterQuotient:
      return "center-quotient";
    case K::FreeAbelian:
      return "free-abelian";
    case K::FouxeRabinovitch:
      return "fouxe-rabinovitch";
    case K::Trivial:
      return "trivial";
  }
  return "?";
}

const char* to_string(DecompositionNode::Structure s) {
  using S = DecompositionNode::Structure;
  switch (s) {
    case S::DirectInn:
      return "direct-inn";
    case S::SemidirectZH:
      return "semidirect-zh";
    case S::Flagged:
      return "flagged";
  }
  return "?";
}

std::shared_ptr<const DecompositionNode> decompose(
    const Graph& g, const SpecialFamily& G, const SpecialFamily& H,
    const OmegaPartition& omega, const DecomposeOptions& opts) {
  validate_omega(g, omega);
  const auto gens = generators_of(omega);
  for (const auto& c : gens) {
    for (auto d : G.members())
      if (!preserves(g, c, d))
        throw InternalError(format_generator(g, c) + " does not preserve " +
                            g.format(d));
    for (auto d : H.members())
      if (!acts_trivially(g, c, d))
        throw InternalError(format_generator(g, c) +
                            " acts nontrivially on " + g.format(d));
  }

  auto node = std::make_shared<DecompositionNode>();
  node->graph = g;
  node->H = H;
  node->omega = omega;
  node->omega_rank = omega_rank_of(omega);
  node->G = saturate_with(g, G, gens, opts.saturation_cap);

  // Case 1. A member acted on nontrivially keeps that property after
  // removing its center, and the reduced member is again preserved, so the
  // least member with empty center is chosen.
  std::optional<VertexSet> chosen;
  for (auto d : node->G.members()) {
    if (!center_of(g, d).empty()) continue;
    bool trivial = true;
    for (const auto& c : gens)
      if (!acts_trivially(g, c, d)) {
        trivial = false;
        break;
      }
    if (!trivial) {
      chosen = d;
      break;
    }
  }
  if (chosen) {
    const VertexSet delta = *chosen;
    const OmegaSplit split = omega_split(g, omega, delta);
    node->kind = DecompositionNode::Kind::Split;
    node->delta = delta;
    const SpecialFamily kernel_h = H.with(delta);
    const auto before = trivially_acted_count(g, gens);
    const auto after = trivially_acted_count(g, generators_of(split.kernel));
    if (after <= before)
      throw InternalError("kernel of the split at " + g.format(delta) +
                          " does not reduce the complexity");
    node->kernel = decompose(g, node->G, kernel_h, split.kernel, opts);
    node->quotient =
        decompose(split.quotient_graph, restrict_family(node->G, delta),
                  restrict_family(H, delta), split.quotient, opts);
    return node;
  }

  // Case 2: the group acts trivially on every member.
  const auto gcomps = g_components(g, node->G, g.vertices());
  const auto comps = induced_components(g, g.vertices());
  if (gcomps.size() >= 2) {
    node->kind = DecompositionNode::Kind::FouxeRabinovitch;
    node->components = gcomps;
    for (auto d : gcomps)
      node->inner_ranks.push_back(
          static_cast<long long>((d - center_of(g, d)).size()));
    node->star_ok = gcomps.size() <= 3;
    node->structure = gcomps.size() == 2   ? DecompositionNode::Structure::DirectInn
                      : gcomps.size() == 3 ? DecompositionNode::Structure::SemidirectZH
                                           : DecompositionNode::Structure::Flagged;
    return node;
  }
  if (g.size() == 0 || g.is_complete()) {
    node->kind = DecompositionNode::Kind::Trivial;
    return node;
  }
  const VertexSet z = center_of(g, g.vertices());
  if (comps.size() >= 2 || z.empty()) {
    node->kind = DecompositionNode::Kind::FreeAbelian;
    node->rank = node->omega_rank;
    return node;
  }
  // Connected with a proper nonempty center: the group is the one over Γ∖Z.
  const VertexSet rest = g.vertices() - z;
  node->kind = DecompositionNode::Kind::CenterQuotient;
  node->center = z;
  std::vector<std::vector<VertexSet>> blocks;
  for (Vertex v : rest) {
    std::vector<VertexSet> bv;
    for (auto a : omega.of(v)) bv.push_back(restrict_to(rest, a));
    blocks.push_back(std::move(bv));
  }
  const Graph sub = g.induced(rest);
  const SpecialFamily sub_g = restrict_family(node->G, rest);
  node->child = decompose(sub, sub_g, sub_g,
                          OmegaPartition(sub, std::move(blocks)), opts);
  return node;
}

std::shared_ptr<const DecompositionNode> decompose_pout(
    const Graph& g, const DecomposeOptions& opts) {
  return decompose(g, SpecialFamily{}, SpecialFamily{}, standard_omega(g), opts);
}

const char* to_string(SeriesFactor::Type t) {
  switch (t) {
    case SeriesFactor::Type::Raag:
      return "raag";
    case SeriesFactor::Type::FreeAbelian:
      return "free-abelian";
    case SeriesFactor::Type::FlaggedFouxeRabinovitch:
      return "fouxe-rabinovitch-flagged";
  }
  return "?";
}

namespace {

std::string describe_raag(const Graph& r) {
  const auto n = std::to_string(r.size());
  if (r.edge_count() == 0) return "free RAAG rank " + n;
  if (r.is_complete()) return "free abelian RAAG rank " + n;
  return "RAAG on " + n + " vertices, " + std::to_string(r.edge_count()) +
         " edges";
}

void push_raag(SubnormalSeries& s, Graph r) {
  if (r.size() == 0) return;
  SeriesFactor f{SeriesFactor::Type::Raag, static_cast<long long>(r.size()),
                 std::nullopt, describe_raag(r)};
  f.raag_graph = std::move(r);
  s.factors.push_back(std::move(f));
}

// Join of the non-central parts of the given components: the RAAG
// Inn(A_Δ1) × ... × Inn(A_Δk).
Graph inner_product_graph(const Graph& g, const std::vector<VertexSet>& comps) {
  Graph out;
  for (auto d : comps) out = out.join(g.induced(d - center_of(g, d)));
  return out;
}

void collect(const DecompositionNode& n, SubnormalSeries& s) {
  using K = DecompositionNode::Kind;
  switch (n.kind) {
    case K::Split:
      collect(*n.kernel, s);
      collect(*n.quotient, s);
      return;
    case K::CenterQuotient:
      collect(*n.child, s);
      return;
    case K::Trivial:
      return;
    case K::FreeAbelian:
      if (n.rank > 0)
        s.factors.push_back({SeriesFactor::Type::FreeAbelian, n.rank,
                             Graph::complete(static_cast<std::size_t>(n.rank)),
                             "free abelian rank " + std::to_string(n.rank)});
      return;
    case K::FouxeRabinovitch:
      if (n.structure == DecompositionNode::Structure::DirectInn) {
        push_raag(s, inner_product_graph(n.graph, n.components));
      } else if (n.structure == DecompositionNode::Structure::SemidirectZH) {
        push_raag(s, n.graph);
        push_raag(s, inner_product_graph(n.graph, n.components));
      } else {
        s.star_ok = false;
        s.factors.push_back({SeriesFactor::Type::FlaggedFouxeRabinovitch,
                             n.omega_rank, std::nullopt,
                             "Fouxe-Rabinovitch group with " +
                                 std::to_string(n.components.size()) +
                                 " factors (outside condition (*))"});
      }
      return;
  }
}

}  // namespace

SubnormalSeries series_summary(const DecompositionNode& root) {
  SubnormalSeries s;
  collect(root, s);
  for (const auto& f : s.factors) s.total_gr1 += f.gr1_rank;
  return s;
}

}  // namespace raag
