// raagaut: command-line front end for the RAAG automorphism toolkit.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "raag/errors.hpp"
#include "raag/graph_io.hpp"
#include "raag/report.hpp"

namespace {

enum Exit { kOk = 0, kInput = 1, kResource = 2, kInternal = 3 };

struct Common {
  std::string format = "json";
  bool fast = false;
  raag::ComputeOptions compute() const {
    raag::ComputeOptions o;
    o.fast = fast;
    return o;
  }
  bool json() const { return format == "json"; }
};

void emit(const Common& c, const raag::json& j, const std::string& text) {
  if (c.json())
    std::cout << raag::dump(j);
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pure symmetric automorphisms of right-angled Artin groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--fast", common.fast,
               "modular rank computations checked by a second prime");

  std::string graph_path;
  std::optional<int> numeric_degree;
  bool with_series = false;
  std::optional<int> dims_degree;
  std::string kind = "paut";
  std::string variant = "paut";
  int max_degree = 4;
  long long mccool_n = 0;

  auto* analyze = app.add_subcommand("analyze", "full report for a graph");
  analyze->add_option("graph", graph_path, "graph file (JSON or text)")->required();
  analyze->add_option("--numeric-degree", numeric_degree,
                      "run the numeric Koszul cross-check to this degree");
  analyze->add_flag("--series", with_series, "include the Day-Wade series");
  analyze->add_option("--dims", dims_degree, "include graded dimensions");

  auto* present = app.add_subcommand("present", "group presentation");
  present->add_option("graph", graph_path)->required();
  present->add_option("--kind", kind)->check(CLI::IsMember({"paut", "pout"}));

  auto* liedims = app.add_subcommand("liedims", "graded Lie algebra dimensions");
  liedims->add_option("graph", graph_path)->required();
  liedims->add_option("--variant", variant)
      ->check(CLI::IsMember({"paut", "pout", "raag"}));
  liedims->add_option("--max-degree", max_degree)->check(CLI::Range(1, 64));

  auto* koszul = app.add_subcommand("koszul", "Koszulness decision");
  koszul->add_option("graph", graph_path)->required();
  koszul->add_option("--numeric-degree", numeric_degree)->check(CLI::Range(1, 64));

  auto* series = app.add_subcommand("series", "Day-Wade subnormal series");
  series->add_option("graph", graph_path)->required();

  auto* mccool = app.add_subcommand("mccool", "numeric facts for PAut(F_n)");
  mccool->add_option("n", mccool_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*mccool) {
      const auto s = raag::mccool_stats(mccool_n);
      emit(common, raag::mccool_json(mccool_n, s), raag::mccool_text(mccool_n, s));
      return kOk;
    }
    const raag::Graph g = raag::load_graph(graph_path);
    if (*analyze) {
      raag::AnalyzeOptions o;
      o.numeric_degree = numeric_degree;
      o.series = with_series;
      o.dims_degree = dims_degree;
      o.compute = common.compute();
      const auto r = raag::analyze(g, o);
      emit(common, raag::analysis_json(r), raag::analysis_text(r));
      if (r.koszul.inconsistent()) {
        std::cerr << "internal inconsistency: numeric check failed on a graph "
                     "satisfying (*)\n";
        return kInternal;
      }
      return kOk;
    }
    if (*present) {
      const auto p = kind == "pout" ? raag::pout_presentation(g)
                                    : raag::paut_presentation(g);
      emit(common, raag::presentation_json(g, p), raag::presentation_text(g, p));
      return kOk;
    }
    if (*liedims) {
      raag::LieVariant v = variant == "pout"   ? raag::LieVariant::pout()
                           : variant == "raag" ? raag::LieVariant::raag()
                                               : raag::LieVariant::paut();
      const auto d = raag::variant_dims(g, v, max_degree, common.compute());
      raag::json j{{"variant", variant}, {"max_degree", max_degree}, {"dims", d}};
      emit(common, j, raag::dims_text({{variant, d}}));
      return kOk;
    }
    if (*koszul) {
      const auto k = raag::koszul_report(g, numeric_degree, common.compute());
      emit(common, raag::koszul_json(g, k), raag::koszul_text(g, k));
      if (k.inconsistent()) {
        std::cerr << "internal inconsistency: numeric check failed on a graph "
                     "satisfying (*)\n";
        return kInternal;
      }
      return kOk;
    }
    if (*series) {
      const auto tree = raag::decompose_pout(g);
      const auto s = raag::series_summary(*tree);
      raag::json j{{"format", "raag-series"},
                   {"version", raag::kSchemaVersion},
                   {"tree", raag::tree_json(*tree)},
                   {"summary", raag::series_json(s)}};
      emit(common, j, raag::tree_text(*tree) + raag::series_text(s));
      return kOk;
    }
  } catch (const raag::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kResource;
  } catch (const raag::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const raag::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
