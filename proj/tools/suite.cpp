#include "suite.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "gemcolor/colorer.hpp"
#include "gemcolor/errors.hpp"
#include "gemcolor/exact.hpp"
#include "gemcolor/generators.hpp"
#include "gemcolor/io.hpp"
#include "gemcolor/partition.hpp"
#include "gemcolor/patterns.hpp"
#include "reference.hpp"

namespace gemcolor::suite {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failure messages; only the first few are kept in the detail.
class Failures {
 public:
  void add(const std::string& message) {
    if (count_++ < kKept) messages_.push_back(message);
  }
  int count() const { return count_; }
  std::string text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < messages_.size(); ++i) {
      out << (i ? "; " : "") << messages_[i];
    }
    if (count_ > kKept) out << "; ... (" << count_ << " total)";
    return out.str();
  }

 private:
  static constexpr int kKept = 5;
  int count_ = 0;
  std::vector<std::string> messages_;
};

void finish(CriterionResult& r, const Failures& failures, double budget,
            const std::string& ok_detail) {
  r.passed = failures.count() == 0;
  r.detail = r.passed ? ok_detail : failures.text();
  if (r.seconds > budget) {
    r.passed = false;
    std::ostringstream out;
    out << (r.detail.empty() ? "" : r.detail + "; ") << "runtime " << r.seconds
        << " s exceeds " << budget << " s";
    r.detail = out.str();
  }
}

std::string label(const Graph& g) {
  return g.name().empty() ? "graph#" + io::graph_hash(g) : g.name();
}

bool certified(const Graph& g, const Coloring& c) {
  return c.order() == g.order() && c.is_total() && verify_proper(g, c).proper;
}

CriterionResult criterion(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

int scaled(int base, int budget) {
  return (base * budget + kDefaultSizeBudget - 1) / kDefaultSizeBudget;
}

Graph random_graph(std::mt19937_64& rng, int n) {
  const double p = static_cast<double>(rng() % 9 + 1) / 10.0;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

bool SuiteResult::passed() const {
  for (const auto& c : criteria) {
    if (!c.skipped && !c.passed) return false;
  }
  return true;
}

std::vector<int> SuiteResult::failed_ids() const {
  std::vector<int> out;
  for (const auto& c : criteria) {
    if (!c.skipped && !c.passed) out.push_back(c.id);
  }
  return out;
}

std::vector<Graph> build_corpus(std::uint64_t seed, int count) {
  constexpr SampleStrategy kCycle[] = {SampleStrategy::kExpand, SampleStrategy::kPrune,
                                       SampleStrategy::kReject};
  constexpr int kRejectCeiling = 12;
  constexpr int kAttempts = 50;
  std::vector<Graph> corpus;
  corpus.reserve(count);
  for (int idx = 0; idx < count; ++idx) {
    const int n = 5 + idx % 10;
    SampleStrategy strategy = kCycle[idx % 3];
    // G(n, p) almost never lands in the class beyond this order.
    if (strategy == SampleStrategy::kReject && n > kRejectCeiling) {
      strategy = SampleStrategy::kPrune;
    }
    for (int attempt = 0;; ++attempt) {
      const std::uint64_t s = seed * 1000003ULL + static_cast<std::uint64_t>(idx) * 131 +
                              static_cast<std::uint64_t>(attempt);
      try {
        corpus.push_back(random_class_member(n, s, strategy));
        break;
      } catch (const SamplingFailure&) {
        if (attempt + 1 == kAttempts) throw;
      }
    }
  }
  return corpus;
}

CriterionResult groetzsch_witness() {
  CriterionResult r = criterion(1, "Groetzsch witness mu(C5)");
  const auto start = Clock::now();
  Failures f;
  const Graph g = named_graph("groetzsch");
  const int omega = max_clique(g).omega;
  const int chi = chromatic_number(g).chi;
  if (g.order() != 11) f.add("n = " + std::to_string(g.order()));
  if (omega != 2) f.add("omega = " + std::to_string(omega));
  if (chi != 4) f.add("chi = " + std::to_string(chi));
  if (!is_class_member(g).member) f.add("not a class member");
  int used = 0;
  try {
    const auto res = color_two_omega(g);
    used = res.coloring.num_colors();
    if (!certified(g, res.coloring) || !res.trace.verified) f.add("coloring not verified");
    if (used != 4) f.add("2w coloring uses " + std::to_string(used) + " colors");
  } catch (const Error& e) {
    f.add(e.what());
  }
  r.seconds = seconds_since(start);
  r.counts = {{"n", g.order()}, {"omega", omega}, {"chi", chi}, {"colors", used}};
  finish(r, f, 1.0, "n=11 omega=2 chi=4, 4 colors verified");
  return r;
}

CriterionResult schlafli_witness() {
  CriterionResult r = criterion(2, "Schlafli-complement witness");
  const auto start = Clock::now();
  Failures f;
  Graph g;
  try {
    g = schlafli_complement();
  } catch (const Error& e) {
    f.add(e.what());
  }
  int omega = 0, used = 0, chi = 0;
  double chi_seconds = 0.0;
  if (f.count() == 0) {
    const auto srg = srg_parameters(g);
    if (!srg || *srg != SrgParameters{27, 10, 1, 5}) f.add("not SRG(27,10,1,5)");
    omega = max_clique(g).omega;
    if (omega != 3) f.add("omega = " + std::to_string(omega));
    if (!is_class_member(g).member) f.add("not a class member");
    try {
      const auto res = color_two_omega(g);
      used = res.coloring.num_colors();
      if (!certified(g, res.coloring) || !res.trace.verified) f.add("coloring not verified");
      if (used != 6) f.add("2w coloring uses " + std::to_string(used) + " colors");
    } catch (const Error& e) {
      f.add(e.what());
    }
    const auto chi_start = Clock::now();
    chi = chromatic_number(g).chi;
    chi_seconds = seconds_since(chi_start);
    if (chi != 6) f.add("chi = " + std::to_string(chi));
  }
  r.seconds = seconds_since(start);
  r.counts = {{"omega", omega}, {"chi", chi}, {"colors", used},
              {"chi_seconds", chi_seconds}};
  finish(r, f, 300.0 + 1.0, "SRG(27,10,1,5) omega=3 chi=6, 6 colors verified");
  if (r.seconds - chi_seconds > 1.0) {
    r.passed = false;
    r.detail += "; non-chi steps exceed 1 s";
  }
  return r;
}

CriterionResult expansion_family() {
  CriterionResult r = criterion(3, "lower-bound family K[C5](m), m = 1..3");
  const auto start = Clock::now();
  Failures f;
  nlohmann::json rows = nlohmann::json::array();
  for (int m = 1; m <= 3; ++m) {
    const Graph g = complete_expansion({cycle_graph(5), std::vector<int>(5, m)}).graph;
    const int expected = (10 * m + 3) / 4;
    const int omega = max_clique(g).omega;
    const int shortcut = chi_alpha2_shortcut(g);
    nlohmann::json row = {{"m", m}, {"omega", omega}, {"shortcut", shortcut}};
    if (omega != 2 * m) f.add("m=" + std::to_string(m) + ": omega = " + std::to_string(omega));
    if (shortcut != expected) {
      f.add("m=" + std::to_string(m) + ": matching chi = " + std::to_string(shortcut));
    }
    if (m <= 2) {
      const int exact = chromatic_number(g).chi;
      row["exact"] = exact;
      if (exact != expected || exact != shortcut) {
        f.add("m=" + std::to_string(m) + ": exact chi = " + std::to_string(exact));
      }
    }
    rows.push_back(row);
  }
  r.seconds = seconds_since(start);
  r.counts = {{"rows", rows}};
  finish(r, f, 30.0, "chi = 3, 5, 8; exact and matching agree");
  return r;
}

CriterionResult two_omega_bound(const std::vector<Graph>& corpus) {
  CriterionResult r = criterion(4, "2w bound on sampled class members");
  const auto start = Clock::now();
  Failures f;
  std::map<std::string, int> cases, modes;
  for (const Graph& g : corpus) {
    try {
      const auto res = color_two_omega(g);
      ++cases[std::string(case_name(res.trace.proof_case))];
      ++modes[std::string(cell_mode_name(res.trace.cell_mode))];
      const int used = res.coloring.num_colors();
      if (!certified(g, res.coloring) || !res.trace.verified) {
        f.add(label(g) + ": improper coloring");
      }
      if (used > 2 * res.omega) {
        f.add(label(g) + ": " + std::to_string(used) + " colors > 2w");
      }
      const int chi = chromatic_number(g).chi;
      if (chi > used) f.add(label(g) + ": chi above colors used");
    } catch (const Error& e) {
      f.add(label(g) + ": " + e.what());
    }
  }
  r.seconds = seconds_since(start);
  r.counts = {{"graphs", corpus.size()}, {"cases", cases}, {"c12_modes", modes}};
  finish(r, f, 120.0, std::to_string(corpus.size()) + " graphs, all <= 2w");
  return r;
}

CriterionResult three_omega_bound(const std::vector<Graph>& corpus) {
  CriterionResult r = criterion(5, "3w-2 bound on sampled class members");
  const auto start = Clock::now();
  Failures f;
  for (const Graph& g : corpus) {
    try {
      const auto res = color_three_omega(g);
      const int used = res.coloring.num_colors();
      if (!certified(g, res.coloring)) f.add(label(g) + ": improper coloring");
      if (used > 3 * res.omega - 2) {
        f.add(label(g) + ": " + std::to_string(used) + " colors > 3w-2");
      }
      if (!res.upper_p4_free || !res.lower_p4_free) {
        f.add(label(g) + ": a piece contains P4");
      }
    } catch (const Error& e) {
      f.add(label(g) + ": " + e.what());
    }
  }
  r.seconds = seconds_since(start);
  r.counts = {{"graphs", corpus.size()}};
  finish(r, f, 120.0, std::to_string(corpus.size()) + " graphs, all <= 3w-2");
  return r;
}

CriterionResult lemma_suite(const std::vector<Graph>& corpus) {
  CriterionResult r = criterion(6, "structural lemma checks");
  const auto start = Clock::now();
  Failures f;
  std::map<std::string, std::map<std::string, int>> tally;
  for (const Graph& g : corpus) {
    const WBCPartition p = build_partition(g);
    for (const CheckReport& rep :
         {check_fact1(g, p), check_lemma_gem(g, p), check_lemma_class(g, p),
          check_claim1(g, p)}) {
      auto& t = tally[rep.check];
      if (rep.status == CheckStatus::kRefused) {
        ++t["refused"];
        continue;
      }
      ++t["ran"];
      t["entries"] += static_cast<int>(rep.entries.size());
      if (!rep.precondition_met) {
        f.add(label(g) + ": " + rep.check + " precondition unmet on a class member");
        continue;
      }
      for (const CheckEntry& e : rep.entries) {
        if (!e.passed) f.add(label(g) + ": " + e.clause + " " + e.detail);
      }
    }
  }
  r.seconds = seconds_since(start);
  r.counts = tally;
  finish(r, f, 120.0, std::to_string(corpus.size()) + " graphs, zero clause failures");
  return r;
}

CriterionResult matcher_oracle(std::uint64_t seed, int graphs) {
  CriterionResult r = criterion(7, "pattern matcher vs subset enumeration");
  const auto start = Clock::now();
  Failures f;
  const auto patterns = parse_pattern_list("p3,p4,2k2,p3up2,gem,diamond,c4");
  std::mt19937_64 rng(seed ^ 0x7A7A7A7A7A7A7A7AULL);
  int comparisons = 0, present = 0;
  for (int i = 0; i < graphs; ++i) {
    const Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 7));
    for (const Pattern& pat : patterns) {
      const auto found = find_induced(g, pat);
      const bool brute = reference::contains_induced(g, pat.graph);
      ++comparisons;
      present += brute;
      if (found.has_value() != brute) {
        f.add("graph " + std::to_string(i) + " " + pat.name + ": matcher " +
              (found ? "found" : "missed"));
      } else if (found && !witness_is_valid(g, pat, *found)) {
        f.add("graph " + std::to_string(i) + " " + pat.name + ": invalid witness");
      }
    }
  }
  r.seconds = seconds_since(start);
  r.counts = {{"graphs", graphs}, {"comparisons", comparisons}, {"present", present}};
  finish(r, f, 120.0, std::to_string(comparisons) + " comparisons, zero mismatches");
  return r;
}

CriterionResult exact_oracle(std::uint64_t seed, int graphs, int mycielski) {
  CriterionResult r = criterion(8, "exact chi vs exhaustive enumeration");
  const auto start = Clock::now();
  Failures f;
  std::mt19937_64 rng(seed ^ 0x5C5C5C5C5C5C5C5CULL);
  for (int i = 0; i < graphs; ++i) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 7));
    const auto res = chromatic_number(g);
    const int brute = reference::chromatic_number(g);
    if (res.chi != brute) {
      f.add("graph " + std::to_string(i) + ": chi " + std::to_string(res.chi) +
            " vs " + std::to_string(brute));
    }
    if (!certified(g, res.witness) || res.witness.num_colors() != res.chi) {
      f.add("graph " + std::to_string(i) + ": bad witness");
    }
  }
  for (int i = 0; i < mycielski; ++i) {
    const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7));
    const int base = chromatic_number(g).chi;
    const int lifted = chromatic_number(mycielskian(g)).chi;
    if (lifted != base + 1) {
      f.add("mycielskian " + std::to_string(i) + ": " + std::to_string(lifted) +
            " != " + std::to_string(base) + " + 1");
    }
  }
  r.seconds = seconds_since(start);
  r.counts = {{"graphs", graphs}, {"mycielskians", mycielski}};
  finish(r, f, 120.0,
         std::to_string(graphs) + " graphs and " + std::to_string(mycielski) +
             " mycielskians, zero mismatches");
  return r;
}

SuiteResult run(const Options& options) {
  SuiteResult out;
  out.criteria.push_back(groetzsch_witness());
  out.criteria.push_back(schlafli_witness());
  out.criteria.push_back(expansion_family());
  const int budget = options.size_budget;
  if (budget <= 0) {
    const char* names[] = {"2w bound on sampled class members",
                           "3w-2 bound on sampled class members",
                           "structural lemma checks",
                           "pattern matcher vs subset enumeration",
                           "exact chi vs exhaustive enumeration"};
    for (int id = 4; id <= 8; ++id) {
      CriterionResult skipped = criterion(id, names[id - 4]);
      skipped.skipped = true;
      skipped.detail = "size budget 0";
      out.criteria.push_back(skipped);
    }
    return out;
  }
  const auto corpus_start = Clock::now();
  const std::vector<Graph> corpus = build_corpus(options.seed, budget);
  const double corpus_seconds = seconds_since(corpus_start);
  out.criteria.push_back(two_omega_bound(corpus));
  out.criteria.push_back(three_omega_bound(corpus));
  out.criteria.push_back(lemma_suite(corpus));
  for (int i = 3; i <= 5; ++i) out.criteria[i].counts["corpus_seconds"] = corpus_seconds;
  out.criteria.push_back(matcher_oracle(options.seed, scaled(500, budget)));
  out.criteria.push_back(exact_oracle(options.seed, scaled(300, budget), scaled(20, budget)));
  return out;
}

nlohmann::json to_json(const CriterionResult& r) {
  return {{"id", r.id},           {"name", r.name},       {"passed", r.passed},
          {"skipped", r.skipped}, {"seconds", r.seconds}, {"detail", r.detail},
          {"counts", r.counts}};
}

nlohmann::json to_json(const SuiteResult& r, const Options& options) {
  nlohmann::json criteria = nlohmann::json::array();
  for (const auto& c : r.criteria) criteria.push_back(to_json(c));
  return {{"seed", options.seed},
          {"size_budget", options.size_budget},
          {"passed", r.passed()},
          {"failed", r.failed_ids()},
          {"criteria", std::move(criteria)}};
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream out;
  out << "criterion " << r.id << ": "
      << (r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL")) << "  " << r.name;
  if (!r.detail.empty()) out << " (" << r.detail << ")";
  out << " [" << std::fixed << std::setprecision(2) << r.seconds << " s]";
  return out.str();
}

}  // namespace gemcolor::suite
