#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "gemcolor/colorer.hpp"
#include "gemcolor/errors.hpp"
#include "gemcolor/exact.hpp"
#include "gemcolor/generators.hpp"
#include "gemcolor/io.hpp"
#include "gemcolor/partition.hpp"
#include "gemcolor/patterns.hpp"
#include "suite.hpp"

#ifndef GEMCOLOR_VERSION
#define GEMCOLOR_VERSION "0.0.0"
#endif

namespace gemcolor::cli {

namespace {

using Json = nlohmann::json;

struct Common {
  std::string input;
  std::string format;
  std::uint64_t seed = 0;
  bool human = false;
};

struct Loaded {
  Graph graph;
  Json descriptor;
};

Loaded load(const Common& common) {
  namespace fs = std::filesystem;
  Loaded out;
  std::string kind;
  if (fs::exists(common.input)) {
    const io::Format format = common.format.empty()
                                  ? io::format_from_extension(common.input)
                                  : io::parse_format(common.format);
    out.graph = io::read_graph_file(common.input, format);
    kind = "file";
  } else {
    try {
      out.graph = named_graph(common.input);
    } catch (const UnknownName&) {
      throw MalformedInput("'" + common.input + "' is neither a readable file nor a graph name");
    }
    kind = "name";
  }
  out.descriptor = {{"source", common.input},
                    {"kind", kind},
                    {"name", out.graph.name()},
                    {"n", out.graph.order()},
                    {"m", out.graph.edge_count()},
                    {"hash", io::graph_hash(out.graph)}};
  return out;
}

Json envelope(const std::string& command, const Common& common) {
  return {{"tool", "gemcolor"},
          {"version", version()},
          {"command", command},
          {"seed", common.seed}};
}

Json witness_json(const PatternWitness& w) {
  return {{"pattern", w.pattern}, {"vertices", w.embedding}};
}

std::string join(const std::vector<int>& values) {
  std::ostringstream s;
  for (std::size_t i = 0; i < values.size(); ++i) s << (i ? " " : "") << values[i];
  return s.str();
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int check(const Common& common, const std::string& class_spec) {
    Json report = envelope("check", common);
    const Loaded in = load(common);
    const auto family = parse_pattern_list(class_spec);
    const Membership m = is_class_member(in.graph, family);
    report["input"] = in.descriptor;
    report["class"] = class_spec;
    report["member"] = m.member;
    if (m.witness) report["witness"] = witness_json(*m.witness);
    if (common.human) {
      out_ << in.descriptor["source"].get<std::string>() << ": "
           << (m.member ? "member of " : "not a member of ") << class_spec << "-free";
      if (m.witness) {
        out_ << " (induced " << m.witness->pattern << " on " << join(m.witness->embedding)
             << ")";
      }
      out_ << "\n";
    } else {
      out_ << report.dump(2) << "\n";
    }
    return m.member ? kSuccess : kNegative;
  }

  int color(const Common& common, const std::string& algorithm, int max_n) {
    Json report = envelope("color", common);
    const Loaded in = load(common);
    const Graph& g = in.graph;
    report["input"] = in.descriptor;
    const auto start = std::chrono::steady_clock::now();
    Json result;
    bool within_bound = true;
    try {
      if (algorithm == "two-omega") {
        const auto r = color_two_omega(g);
        result = coloring_json(algorithm, r.coloring, r.omega, 2 * r.omega, r.trace.verified);
        result["trace"] = to_json(r.trace);
        within_bound = r.coloring.num_colors() <= 2 * r.omega;
      } else if (algorithm == "three-omega") {
        const auto r = color_three_omega(g);
        const bool ok = verify_proper(g, r.coloring).proper;
        result = coloring_json(algorithm, r.coloring, r.omega, 3 * r.omega - 2, ok);
        result["pieces"] = {{"upper", r.upper.to_vector()},
                            {"lower", r.lower.to_vector()},
                            {"upper_colors", r.upper_colors},
                            {"lower_colors", r.lower_colors},
                            {"cell_colors", r.cell_colors},
                            {"upper_p4_free", r.upper_p4_free},
                            {"lower_p4_free", r.lower_p4_free}};
        if (!ok) throw CertificationFailure("three-omega coloring is improper", std::nullopt, result);
        within_bound = r.coloring.num_colors() <= 3 * r.omega - 2;
      } else if (algorithm == "greedy") {
        const Coloring c = greedy_coloring(g);
        int max_degree = 0;
        for (Vertex v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
        const int omega = g.order() ? max_clique(g).omega : 0;
        result = coloring_json(algorithm, c, omega, max_degree + 1, verify_proper(g, c).proper);
      } else if (algorithm == "exact") {
        const ChiResult r = chromatic_number(g, max_n);
        const int omega = g.order() ? max_clique(g).omega : 0;
        result = coloring_json(algorithm, r.witness, omega, r.chi,
                               verify_proper(g, r.witness).proper);
      } else {
        throw UnknownName("unknown algorithm '" + algorithm + "'");
      }
    } catch (const ClassViolation& e) {
      report["member"] = false;
      report["witness"] = witness_json(e.witness());
      report["error"] = e.what();
      emit(report, common, "not a class member: " + std::string(e.what()));
      return kNegative;
    } catch (const CertificationFailure& e) {
      report["error"] = e.what();
      report["trace"] = e.trace();
      if (e.conflict()) report["conflict"] = {e.conflict()->first, e.conflict()->second};
      emit(report, common, "certification failure: " + std::string(e.what()));
      return kCertification;
    }
    report["seconds"] = seconds_since(start);
    report["result"] = result;
    report["within_bound"] = within_bound;
    if (common.human) {
      out_ << in.descriptor["source"].get<std::string>() << ": " << algorithm << " used "
           << result["num_colors"] << " colors (omega " << result["omega"] << ", bound "
           << result["bound"] << ", verified " << (result["verified"] ? "yes" : "no")
           << ")\n";
    } else {
      out_ << report.dump(2) << "\n";
    }
    return within_bound ? kSuccess : kNegative;
  }

  int chi(const Common& common, int max_n) {
    Json report = envelope("chi", common);
    const Loaded in = load(common);
    report["input"] = in.descriptor;
    const auto start = std::chrono::steady_clock::now();
    const ChiResult r = chromatic_number(in.graph, max_n);
    const int omega = in.graph.order() ? max_clique(in.graph).omega : 0;
    report["seconds"] = seconds_since(start);
    report["omega"] = omega;
    report["chi"] = r.chi;
    report["witness"] = r.witness.colors();
    if (common.human) {
      out_ << in.descriptor["source"].get<std::string>() << ": chi = " << r.chi
           << ", omega = " << omega << "\n";
    } else {
      out_ << report.dump(2) << "\n";
    }
    return kSuccess;
  }

  int partition(const Common& common) {
    Json report = envelope("partition", common);
    const Loaded in = load(common);
    const Graph& g = in.graph;
    report["input"] = in.descriptor;
    const WBCPartition p = build_partition(g);
    report["partition"] = to_json(p);
    Json checks = Json::array();
    bool contradiction = false;
    std::ostringstream human;
    for (const CheckReport& rep :
         {check_fact1(g, p), check_lemma_gem(g, p), check_lemma_class(g, p),
          check_claim1(g, p)}) {
      checks.push_back(to_json(rep));
      const bool refused = rep.status == CheckStatus::kRefused;
      if (!refused && rep.precondition_met && !rep.passed()) contradiction = true;
      human << "  " << rep.check << ": "
            << (refused ? "refused" : rep.passed() ? "pass" : "FAIL") << " ("
            << rep.entries.size() << " clauses, " << rep.failures() << " failed)\n";
    }
    report["checks"] = checks;
    if (common.human) {
      out_ << in.descriptor["source"].get<std::string>() << ": omega = " << p.omega()
           << "\n" << human.str();
    } else {
      out_ << report.dump(2) << "\n";
    }
    return contradiction ? kNegative : kSuccess;
  }

  int gen(const Common& common, const std::string& what, int n, const std::string& strategy,
          const std::vector<int>& sizes, const std::string& base, const std::string& out_path) {
    Graph g;
    std::optional<Json> sidecar;
    if (what == "random") {
      g = random_class_member(n, common.seed, parse_strategy(strategy));
    } else if (what == "expansion") {
      const ExpansionSpec spec{named_graph(base), sizes};
      const Expansion e = complete_expansion(spec);
      g = e.graph.with_name("expansion-" + spec.base.name());
      sidecar = expansion_sidecar(spec, e);
    } else {
      g = named_graph(what);
    }
    const io::Format format = !common.format.empty() ? io::parse_format(common.format)
                              : !out_path.empty()    ? io::format_from_extension(out_path)
                                                     : io::Format::kJson;
    if (out_path.empty()) {
      io::write_graph(out_, g, format);
      return kSuccess;
    }
    std::ofstream file(out_path);
    if (!file) throw MalformedInput("cannot write '" + out_path + "'");
    io::write_graph(file, g, format);
    Json report = envelope("gen", common);
    report["output"] = out_path;
    report["graph"] = {{"name", g.name()}, {"n", g.order()}, {"m", g.edge_count()},
                       {"hash", io::graph_hash(g)}};
    if (sidecar) {
      const std::string meta_path = out_path + ".meta.json";
      std::ofstream meta(meta_path);
      if (!meta) throw MalformedInput("cannot write '" + meta_path + "'");
      meta << sidecar->dump(2) << "\n";
      report["sidecar"] = meta_path;
    }
    if (common.human) {
      out_ << "wrote " << out_path << " (n = " << g.order() << ", m = " << g.edge_count()
           << ")\n";
    } else {
      out_ << report.dump(2) << "\n";
    }
    return kSuccess;
  }

  int suite(const Common& common, int size_budget) {
    suite::Options options;
    options.seed = common.seed;
    options.size_budget = size_budget;
    const suite::SuiteResult r = suite::run(options);
    if (common.human) {
      for (const auto& c : r.criteria) out_ << suite::summary_line(c) << "\n";
      out_ << (r.passed() ? "all criteria passed" : "some criteria failed") << "\n";
    } else {
      Json report = envelope("suite", common);
      report.update(suite::to_json(r, options));
      out_ << report.dump(2) << "\n";
    }
    return r.passed() ? kSuccess : kNegative;
  }

 private:
  static double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  void emit(const Json& report, const Common& common, const std::string& line) {
    if (common.human) {
      out_ << line << "\n";
    } else {
      out_ << report.dump(2) << "\n";
    }
  }

  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

std::string version() { return GEMCOLOR_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coloring and verification tools for {P3 u P2, gem}-free graphs", "gemcolor"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  Common common;
  auto add_common = [&common](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("input", common.input, "Graph file (.col, .json, edge list) or graph name")
          ->required();
    }
    sub->add_option("--format", common.format, "dimacs | edgelist | json");
    sub->add_option("--seed", common.seed, "Random seed");
    sub->add_flag("--human", common.human, "Plain-text output instead of JSON");
  };

  std::string class_spec = "p3up2,gem";
  auto* check = app.add_subcommand("check", "Test membership in a forbidden-subgraph class");
  add_common(check, true);
  check->add_option("--class", class_spec, "Comma-separated forbidden patterns");

  std::string algorithm = "two-omega";
  int max_n = kDefaultChiMaxOrder;
  auto* color = app.add_subcommand("color", "Color a graph and verify the result");
  add_common(color, true);
  color->add_option("--algorithm", algorithm, "two-omega | three-omega | greedy | exact");
  color->add_option("--max-n", max_n, "Largest order accepted by the exact search");

  auto* chi = app.add_subcommand("chi", "Exact chromatic number");
  add_common(chi, true);
  chi->add_option("--max-n", max_n, "Largest order accepted by the exact search");

  auto* part = app.add_subcommand("partition", "Clique partition and structural checks");
  add_common(part, true);

  std::string what, strategy = "expand", base = "c5", out_path;
  int n = 10;
  std::vector<int> sizes;
  auto* gen = app.add_subcommand("gen", "Generate a named, random or expanded graph");
  add_common(gen, false);
  gen->add_option("what", what, "Graph name, 'random' or 'expansion'")->required();
  gen->add_option("--n", n, "Order of a random graph");
  gen->add_option("--strategy", strategy, "reject | expand | prune");
  gen->add_option("--base", base, "Base graph name for 'expansion'");
  gen->add_option("--sizes", sizes, "Bag sizes for 'expansion'")->delimiter(',');
  gen->add_option("--out", out_path, "Write the graph here instead of standard output");

  int size_budget = suite::kDefaultSizeBudget;
  auto* run_suite = app.add_subcommand("suite", "Run the acceptance criteria");
  add_common(run_suite, false);
  common.seed = 0;
  run_suite->add_option("--size-budget", size_budget, "Corpus size; 0 skips sampled criteria");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "gemcolor: " << e.what() << "\n";
    return kInputError;
  }

  Runner runner(out, err);
  try {
    if (*check) return runner.check(common, class_spec);
    if (*color) return runner.color(common, algorithm, max_n);
    if (*chi) return runner.chi(common, max_n);
    if (*part) return runner.partition(common);
    if (*gen) return runner.gen(common, what, n, strategy, sizes, base, out_path);
    if (*run_suite) {
      if (run_suite->count("--seed") == 0) common.seed = suite::Options{}.seed;
      return runner.suite(common, size_budget);
    }
  } catch (const ClassViolation& e) {
    err << "gemcolor: " << e.what() << "\n";
    return kNegative;
  } catch (const CertificationFailure& e) {
    err << "gemcolor: " << e.what() << "\n";
    return kCertification;
  } catch (const Error& e) {
    err << "gemcolor: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "gemcolor: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace gemcolor::cli
