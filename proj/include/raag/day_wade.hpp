#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/presentation.hpp"

namespace raag {

// Proper nonempty full subgraphs, canonically ordered. The singleton family
// {{v}} is always implied and never has to be listed.
class SpecialFamily {
 public:
  SpecialFamily() = default;
  // Throws InputError for members that are empty, improper or not in g.
  SpecialFamily(const Graph& g, std::vector<VertexSet> members);
  static SpecialFamily unchecked(std::vector<VertexSet> members);

  const std::vector<VertexSet>& members() const { return members_; }
  bool contains(VertexSet s) const;
  std::size_t size() const { return members_.size(); }
  SpecialFamily with(VertexSet s) const;

  bool operator==(const SpecialFamily&) const = default;

 private:
  std::vector<VertexSet> members_;
};

struct PcAction {
  bool preserves;
  bool acts_trivially;
};

PcAction pc_action_on_special(const Graph& g, const PartialConjugation& c,
                              VertexSet delta);

struct RelativeConjugation {
  PartialConjugation pc;
  bool minimal;
};

// Every c_K^v (K a nonempty union of components of Γ∖st(v)) preserving each
// member of G and acting trivially on each member of H.
std::vector<RelativeConjugation> relative_partial_conjugations(
    const Graph& g, const SpecialFamily& G, const SpecialFamily& H);

// The minimal admissible bases per vertex; they partition each Γ∖st(v).
OmegaPartition relative_atoms(const Graph& g, const SpecialFamily& G,
                              const SpecialFamily& H);

inline constexpr std::size_t kDefaultSaturationCap = 16;

SpecialFamily saturate(const Graph& g, const SpecialFamily& G,
                       const SpecialFamily& H,
                       std::size_t vertex_cap = kDefaultSaturationCap);

// Proper special subgraphs preserved by every given generator, together
// with the members of G.
SpecialFamily saturate_with(const Graph& g, const SpecialFamily& G,
                            const std::vector<PartialConjugation>& gens,
                            std::size_t vertex_cap = kDefaultSaturationCap);

std::vector<VertexSet> g_components(const Graph& g, const SpecialFamily& fam,
                                    VertexSet s);

// Vertices of s adjacent to every other vertex of s.
VertexSet center_of(const Graph& g, VertexSet s);

struct DecompositionNode {
  enum class Kind { Split, CenterQuotient, FreeAbelian, FouxeRabinovitch,
                    Trivial };
  enum class Structure { DirectInn, SemidirectZH, Flagged };

  Kind kind = Kind::Trivial;
  Graph graph;
  SpecialFamily G;  // saturated
  SpecialFamily H;
  OmegaPartition omega;
  // Σ_v max(|Ω^v| - 1, 0): the degree-1 rank of the carried presentation
  // modulo inner automorphisms.
  long long omega_rank = 0;

  // Split
  VertexSet delta;
  std::shared_ptr<const DecompositionNode> kernel;
  std::shared_ptr<const DecompositionNode> quotient;

  // CenterQuotient: the group is isomorphic to the one over Γ∖center.
  VertexSet center;
  std::shared_ptr<const DecompositionNode> child;

  // FreeAbelian
  long long rank = 0;

  // FouxeRabinovitch
  std::vector<VertexSet> components;
  Structure structure = Structure::DirectInn;
  std::vector<long long> inner_ranks;  // |Δ_i ∖ Z(Δ_i)|
  bool star_ok = true;
};

const char* to_string(DecompositionNode::Kind k);
const char* to_string(DecompositionNode::Structure s);

struct DecomposeOptions {
  std::size_t saturation_cap = kDefaultSaturationCap;
};

std::shared_ptr<const DecompositionNode> decompose(
    const Graph& g, const SpecialFamily& G, const SpecialFamily& H,
    const OmegaPartition& omega, const DecomposeOptions& opts = {});

// decompose for POut(A_Γ) itself.
std::shared_ptr<const DecompositionNode> decompose_pout(
    const Graph& g, const DecomposeOptions& opts = {});

struct SeriesFactor {
  enum class Type { Raag, FreeAbelian, FlaggedFouxeRabinovitch };
  Type type;
  long long gr1_rank;
  std::optional<Graph> raag_graph;
  std::string description;
};

const char* to_string(SeriesFactor::Type t);

struct SubnormalSeries {
  std::vector<SeriesFactor> factors;
  long long total_gr1 = 0;
  bool star_ok = true;
};

SubnormalSeries series_summary(const DecompositionNode& root);

}  // namespace raag
