#include "raag/report.hpp"

#include <sstream>

#include "raag/errors.hpp"

namespace raag {

McCoolStats mccool_stats(long long n) {
  if (n < 2) throw InputError("McCool group needs n >= 2, got " + std::to_string(n));
  if (n > 16)
    throw InputError("n = " + std::to_string(n) +
                     " overflows the 64-bit Euler characteristic; use n <= 16");
  long long pw = 1;
  for (long long k = 0; k < n - 1; ++k) pw *= n - 1;
  return {n - 1, (n - 1) % 2 == 0 ? pw : -pw, n <= 3};
}

NumericCheck paut_numeric_check(const Graph& g, int degree,
                                const ComputeOptions& opts) {
  if (degree < 1) throw InputError("numeric degree must be at least 1");
  const auto a = enveloping_quadratic(lie_presentation(g, LieVariant::paut()));
  const auto dual = quadratic_dual(a);
  NumericCheck out{degree, false, std::nullopt, algebra_hilbert(a, degree, opts),
                   algebra_hilbert(dual, degree, opts)};
  const auto r = koszul_numeric_test(out.algebra, out.dual, degree);
  out.pass = r.pass;
  out.first_failure = r.first_failure;
  return out;
}

KoszulReport koszul_report(const Graph& g, std::optional<int> numeric_degree,
                           const ComputeOptions& opts) {
  KoszulReport k{check_star_condition(g), false, std::nullopt};
  k.koszul = k.star.holds;
  if (numeric_degree) k.numeric = paut_numeric_check(g, *numeric_degree, opts);
  return k;
}

GradedDims variant_dims(const Graph& g, const LieVariant& v, int degree,
                        const ComputeOptions& opts) {
  return graded_dims(eliminate_linear(lie_presentation(g, v)), degree, opts);
}

DimsTable dims_table(const Graph& g, int degree, const ComputeOptions& opts) {
  return {degree, variant_dims(g, LieVariant::paut(), degree, opts),
          variant_dims(g, LieVariant::pout(), degree, opts),
          variant_dims(g, LieVariant::raag(), degree, opts)};
}

AnalysisReport analyze(const Graph& g, const AnalyzeOptions& opts) {
  AnalysisReport r;
  r.graph = g;
  r.sil_pairs = find_sil_pairs(g);
  r.koszul = koszul_report(g, opts.numeric_degree, opts.compute);
  if (opts.series) {
    r.tree = decompose_pout(g);
    r.series = series_summary(*r.tree);
  }
  if (opts.dims_degree) r.dims = dims_table(g, *opts.dims_degree, opts.compute);
  return r;
}

namespace {

json names(const Graph& g, VertexSet s) { return g.name_list(s); }

json header(const char* format) {
  return {{"format", format}, {"version", kSchemaVersion}};
}

json family_json(const Graph& g, const SpecialFamily& f) {
  json out = json::array();
  for (auto m : f.members()) out.push_back(names(g, m));
  return out;
}

json optional_int(const std::optional<int>& x) {
  return x ? json(*x) : json(nullptr);
}

}  // namespace

json graph_summary_json(const Graph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({g.name(a), g.name(b)});
  return {{"vertex_count", g.size()},
          {"edge_count", g.edge_count()},
          {"vertices", g.names()},
          {"edges", edges},
          {"clique_polynomial", clique_polynomial(g)}};
}

json sil_pairs_json(const Graph& g, const std::vector<SilPair>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) {
    json shared = json::array();
    for (auto s : p.shared) shared.push_back(names(g, s));
    out.push_back({{"v", g.name(p.v)}, {"w", g.name(p.w)}, {"shared", shared}});
  }
  return out;
}

json star_json(const Graph& g, const StarCondition& s) {
  json w = nullptr;
  if (s.witness) {
    w = json::array();
    for (auto v : *s.witness) w.push_back(g.name(v));
  }
  return {{"holds", s.holds}, {"witness", w}};
}

json presentation_json(const Graph& g, const GroupPresentation& p) {
  json j = header("raag-presentation");
  j["kind"] = to_string(p.kind);
  json gens = json::array();
  for (const auto& c : p.generators)
    gens.push_back({{"actor", g.name(c.actor)}, {"base", names(g, c.base)}});
  j["generators"] = gens;
  json rels = json::array();
  for (const auto& r : p.relators) {
    json word = json::array();
    for (auto l : r.word()) word.push_back({l.gen, l.exp});
    rels.push_back({{"type", r.shape == Relator::Shape::Commutator ? "commutator"
                                                                   : "product"},
                    {"lhs", r.left},
                    {"rhs", r.right},
                    {"word", word}});
  }
  j["relators"] = rels;
  return j;
}

json numeric_json(const NumericCheck& n) {
  return {{"label", kNumericLabel},
          {"degree", n.degree},
          {"pass", n.pass},
          {"first_failure", optional_int(n.first_failure)},
          {"algebra_hilbert", n.algebra},
          {"dual_hilbert", n.dual}};
}

json koszul_json(const Graph& g, const KoszulReport& k) {
  json j = header("raag-koszul");
  j["star_condition"] = k.star.holds;
  j["witness"] = star_json(g, k.star)["witness"];
  j["koszul"] = k.koszul;
  j["decision_by_star_condition"] = k.koszul;
  j["numeric_check"] = k.numeric ? numeric_json(*k.numeric) : json(nullptr);
  return j;
}

json tree_json(const DecompositionNode& n) {
  using K = DecompositionNode::Kind;
  const Graph& g = n.graph;
  json j{{"kind", to_string(n.kind)},
         {"vertices", g.names()},
         {"omega_rank", n.omega_rank},
         {"saturated_family_size", n.G.size()},
         {"trivial_family", family_json(g, n.H)}};
  switch (n.kind) {
    case K::Split:
      j["delta"] = names(g, n.delta);
      j["kernel"] = tree_json(*n.kernel);
      j["quotient"] = tree_json(*n.quotient);
      break;
    case K::CenterQuotient:
      j["center"] = names(g, n.center);
      j["child"] = tree_json(*n.child);
      break;
    case K::FreeAbelian:
      j["rank"] = n.rank;
      break;
    case K::FouxeRabinovitch: {
      json comps = json::array();
      for (auto c : n.components) comps.push_back(names(g, c));
      j["components"] = comps;
      j["structure"] = to_string(n.structure);
      j["inner_ranks"] = n.inner_ranks;
      j["star_ok"] = n.star_ok;
      if (n.structure == DecompositionNode::Structure::SemidirectZH)
        j["z_graph"] = {{"vertices", g.names()}, {"edge_count", g.edge_count()}};
      break;
    }
    case K::Trivial:
      break;
  }
  return j;
}

json series_json(const SubnormalSeries& s) {
  json factors = json::array();
  for (const auto& f : s.factors) {
    json j{{"type", to_string(f.type)},
           {"gr1_rank", f.gr1_rank},
           {"description", f.description}};
    if (f.raag_graph && f.type == SeriesFactor::Type::Raag) {
      json edges = json::array();
      for (auto [a, b] : f.raag_graph->edges())
        edges.push_back({f.raag_graph->name(a), f.raag_graph->name(b)});
      j["graph"] = {{"vertices", f.raag_graph->names()}, {"edges", edges}};
    }
    factors.push_back(j);
  }
  return {{"factors", factors}, {"total_gr1", s.total_gr1}, {"star_ok", s.star_ok}};
}

json dims_json(const DimsTable& d) {
  return {{"max_degree", d.degree}, {"paut", d.paut}, {"pout", d.pout},
          {"raag", d.raag}};
}

json mccool_json(long long, const McCoolStats& s) {
  return {{"cd", s.cd}, {"chi", s.chi}, {"koszul", s.koszul}};
}

json analysis_json(const AnalysisReport& r) {
  json j = header("raag-analysis");
  j["graph"] = graph_summary_json(r.graph);
  j["sil_pairs"] = sil_pairs_json(r.graph, r.sil_pairs);
  j["star_condition"] = star_json(r.graph, r.koszul.star);
  j["koszul_decision"] = r.koszul.koszul;
  if (r.koszul.numeric) j["numeric_check"] = numeric_json(*r.koszul.numeric);
  if (r.series) {
    j["series"] = series_json(*r.series);
    j["tree"] = tree_json(*r.tree);
  }
  if (r.dims) j["dims"] = dims_json(*r.dims);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string join_ints(const std::vector<long long>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string index_list(const std::vector<std::uint32_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += "g" + std::to_string(v[i]);
  }
  return out;
}

void tree_lines(const DecompositionNode& n, int depth, std::ostringstream& os) {
  using K = DecompositionNode::Kind;
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const Graph& g = n.graph;
  os << pad << to_string(n.kind) << " on " << g.format(g.vertices());
  switch (n.kind) {
    case K::Split:
      os << " at " << g.format(n.delta) << "\n";
      os << pad << "  kernel:\n";
      tree_lines(*n.kernel, depth + 2, os);
      os << pad << "  quotient:\n";
      tree_lines(*n.quotient, depth + 2, os);
      return;
    case K::CenterQuotient:
      os << " removing center " << g.format(n.center) << "\n";
      tree_lines(*n.child, depth + 1, os);
      return;
    case K::FreeAbelian:
      os << " rank " << n.rank << "\n";
      return;
    case K::FouxeRabinovitch: {
      os << " " << to_string(n.structure) << " components";
      for (auto c : n.components) os << " " << g.format(c);
      os << (n.star_ok ? "" : " [outside (*)]") << "\n";
      return;
    }
    case K::Trivial:
      os << "\n";
      return;
  }
}

}  // namespace

std::string presentation_text(const Graph& g, const GroupPresentation& p) {
  std::ostringstream os;
  os << "# raag-presentation v" << kSchemaVersion << "\n";
  os << "kind: " << to_string(p.kind) << "\n";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    os << "gen: " << format_generator(g, p.generators[i]) << "  # g" << i << "\n";
  for (const auto& r : p.relators) {
    if (r.shape == Relator::Shape::Commutator)
      os << "rel: [" << index_list(r.left) << ", " << index_list(r.right) << "]\n";
    else
      os << "rel: " << index_list(r.left) << "\n";
  }
  return os.str();
}

std::string koszul_text(const Graph& g, const KoszulReport& k) {
  std::ostringstream os;
  os << "star condition: " << (k.star.holds ? "holds" : "fails");
  if (k.star.witness) {
    os << " (witness";
    for (auto v : *k.star.witness) os << " " << g.name(v);
    os << ")";
  }
  os << "\nkoszul: " << (k.koszul ? "yes" : "no") << "\n";
  if (k.numeric) {
    const auto& n = *k.numeric;
    os << "numeric " << kNumericLabel << " to degree " << n.degree << ": ";
    if (n.pass)
      os << "consistent with Koszulness up to degree " << n.degree << "\n";
    else
      os << "fails at degree " << *n.first_failure << "\n";
    os << "  algebra hilbert " << join_ints(n.algebra) << "\n";
    os << "  dual hilbert    " << join_ints(n.dual) << "\n";
  }
  return os.str();
}

std::string tree_text(const DecompositionNode& n) {
  std::ostringstream os;
  tree_lines(n, 0, os);
  return os.str();
}

std::string series_text(const SubnormalSeries& s) {
  std::ostringstream os;
  os << "factors (" << s.factors.size() << "):\n";
  for (const auto& f : s.factors)
    os << "  " << f.description << "  (gr1 rank " << f.gr1_rank << ")\n";
  os << "total gr1 rank: " << s.total_gr1 << "\n";
  return os.str();
}

std::string dims_text(const std::vector<std::pair<std::string, GradedDims>>& rows) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& [name, d] : rows) width = std::max(width, d.size());
  os << "variant";
  for (std::size_t n = 1; n <= width; ++n) os << "\td" << n;
  os << "\n";
  for (const auto& [name, d] : rows) {
    os << name;
    for (auto x : d) os << "\t" << x;
    os << "\n";
  }
  return os.str();
}

std::string mccool_text(long long n, const McCoolStats& s) {
  std::ostringstream os;
  os << "PAut(F_" << n << "): cd " << s.cd << ", chi " << s.chi << ", koszul "
     << (s.koszul ? "yes" : "no") << "\n";
  return os.str();
}

std::string analysis_text(const AnalysisReport& r) {
  std::ostringstream os;
  const Graph& g = r.graph;
  os << "graph: " << g.size() << " vertices, " << g.edge_count() << " edges\n";
  os << "SIL-pairs: " << r.sil_pairs.size() << "\n";
  for (const auto& p : r.sil_pairs) {
    os << "  " << g.name(p.v) << " " << g.name(p.w) << " shared";
    for (auto s : p.shared) os << " " << g.format(s);
    os << "\n";
  }
  os << koszul_text(g, r.koszul);
  if (r.series) os << tree_text(*r.tree) << series_text(*r.series);
  if (r.dims)
    os << dims_text({{"paut", r.dims->paut}, {"pout", r.dims->pout},
                     {"raag", r.dims->raag}});
  return os.str();
}

}  // namespace raag
