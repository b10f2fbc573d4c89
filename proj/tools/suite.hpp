#ifndef GEMCOLOR_TOOLS_SUITE_HPP
#define GEMCOLOR_TOOLS_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gemcolor/graph.hpp"

namespace gemcolor::suite {

inline constexpr int kDefaultSizeBudget = 200;

struct Options {
  std::uint64_t seed = 1;
  /// Corpus size for the sampled criteria; the oracle criteria scale with
  /// it. 0 skips every sampled criterion.
  int size_budget = kDefaultSizeBudget;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool skipped = false;
  double seconds = 0.0;
  std::string detail;
  nlohmann::json counts = nlohmann::json::object();
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;
  bool passed() const;
  std::vector<int> failed_ids() const;
};

/// Class members with n in [5, 14], cycling through the sampling strategies;
/// seeds that fail to sample are replaced deterministically.
std::vector<Graph> build_corpus(std::uint64_t seed, int count);

CriterionResult groetzsch_witness();
CriterionResult schlafli_witness();
CriterionResult expansion_family();
CriterionResult two_omega_bound(const std::vector<Graph>& corpus);
CriterionResult three_omega_bound(const std::vector<Graph>& corpus);
CriterionResult lemma_suite(const std::vector<Graph>& corpus);
CriterionResult matcher_oracle(std::uint64_t seed, int graphs);
CriterionResult exact_oracle(std::uint64_t seed, int graphs, int mycielski);

SuiteResult run(const Options& options);

nlohmann::json to_json(const CriterionResult& r);
nlohmann::json to_json(const SuiteResult& r, const Options& options);

/// "criterion 3: PASS  lower-bound family K[C5](m) (...) [0.01 s]"
std::string summary_line(const CriterionResult& r);

}  // namespace gemcolor::suite

#endif  // GEMCOLOR_TOOLS_SUITE_HPP
