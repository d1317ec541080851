#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "raag/day_wade.hpp"
#include "raag/graph_core.hpp"
#include "raag/lie.hpp"
#include "raag/presentation.hpp"
#include "raag/quadratic.hpp"

namespace raag {

inline constexpr int kSchemaVersion = 1;

struct McCoolStats {
  long long cd;
  long long chi;
  bool koszul;
};

// Numeric facts for PAut(F_n); n ranges over 2..16 so chi fits in 64 bits.
McCoolStats mccool_stats(long long n);

inline constexpr const char* kNumericLabel = "cross-check (necessary condition)";

struct NumericCheck {
  int degree;
  bool pass;
  std::optional<int> first_failure;
  HilbertSeries algebra;
  HilbertSeries dual;
};

// Hilbert series test on the enveloping algebra of the PAut Lie algebra.
NumericCheck paut_numeric_check(const Graph& g, int degree,
                                const ComputeOptions& opts = {});

struct KoszulReport {
  StarCondition star;
  bool koszul;  // the combinatorial verdict
  std::optional<NumericCheck> numeric;

  // A failed numeric check on a graph satisfying (*).
  bool inconsistent() const {
    return numeric && koszul && !numeric->pass;
  }
};

KoszulReport koszul_report(const Graph& g, std::optional<int> numeric_degree,
                           const ComputeOptions& opts = {});

struct DimsTable {
  int degree;
  GradedDims paut;
  GradedDims pout;
  GradedDims raag;
};

DimsTable dims_table(const Graph& g, int degree, const ComputeOptions& opts = {});

// POut dims are taken after eliminating the linear relations.
GradedDims variant_dims(const Graph& g, const LieVariant& v, int degree,
                        const ComputeOptions& opts = {});

struct AnalyzeOptions {
  std::optional<int> numeric_degree;
  bool series = false;
  std::optional<int> dims_degree;
  ComputeOptions compute;
};

struct AnalysisReport {
  Graph graph;
  std::vector<SilPair> sil_pairs;
  KoszulReport koszul;
  std::shared_ptr<const DecompositionNode> tree;
  std::optional<SubnormalSeries> series;
  std::optional<DimsTable> dims;
};

AnalysisReport analyze(const Graph& g, const AnalyzeOptions& opts);

using nlohmann::json;

json graph_summary_json(const Graph& g);
json sil_pairs_json(const Graph& g, const std::vector<SilPair>& pairs);
json star_json(const Graph& g, const StarCondition& s);
json presentation_json(const Graph& g, const GroupPresentation& p);
json numeric_json(const NumericCheck& n);
json koszul_json(const Graph& g, const KoszulReport& k);
json tree_json(const DecompositionNode& n);
json series_json(const SubnormalSeries& s);
json dims_json(const DimsTable& d);
json mccool_json(long long n, const McCoolStats& s);
json analysis_json(const AnalysisReport& r);

// Indented dump; parsing it back and dumping again gives the same bytes.
std::string dump(const json& j);

std::string presentation_text(const Graph& g, const GroupPresentation& p);
std::string koszul_text(const Graph& g, const KoszulReport& k);
std::string tree_text(const DecompositionNode& n);
std::string series_text(const SubnormalSeries& s);
std::string dims_text(const std::vector<std::pair<std::string, GradedDims>>& rows);
std::string mccool_text(long long n, const McCoolStats& s);
std::string analysis_text(const AnalysisReport& r);

}  // namespace raag
