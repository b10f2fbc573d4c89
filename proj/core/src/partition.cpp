#include "gemcolor/partition.hpp"

#include <algorithm>

#include "gemcolor/errors.hpp"
#include "gemcolor/exact.hpp"
#include "gemcolor/patterns.hpp"

namespace gemcolor {

std::string LexPair::key() const {
  return std::to_string(i) + "," + std::to_string(j);
}

std::vector<LexPair> lex_pairs(int omega) {
  std::vector<LexPair> out;
  for (int i = 1; i <= omega; ++i) {
    for (int j = i + 1; j <= omega; ++j) out.push_back({i, j});
  }
  return out;
}

VertexSet WBCPartition::clique_set(int order) const {
  return VertexSet(order, std::span<const Vertex>(clique));
}

std::vector<int> missed_positions(const Graph& g, const WBCPartition& p,
                                  Vertex v) {
  std::vector<int> out;
  for (int k = 1; k <= p.omega(); ++k) {
    if (!g.adjacent(v, p.v(k))) out.push_back(k);
  }
  return out;
}

std::vector<int> adjacent_positions(const Graph& g, const WBCPartition& p,
                                    const VertexSet& s) {
  std::vector<int> out;
  for (int k = 1; k <= p.omega(); ++k) {
    if (g.neighbors(p.v(k)).intersects(s)) out.push_back(k);
  }
  return out;
}

WBCPartition build_partition(const Graph& g, std::span<const Vertex> clique) {
  const int n = g.order();
  VertexSet a(n);
  for (Vertex v : clique) {
    if (v < 0 || v >= n || a.contains(v)) {
      throw PreconditionError("clique list has a bad or repeated vertex");
    }
    a.insert(v);
  }
  if (!is_clique(g, a)) throw PreconditionError("A is not a clique");
  if (n > 0 && max_clique(g).omega != static_cast<int>(clique.size())) {
    throw PreconditionError("A is not a maximum clique");
  }

  WBCPartition p;
  p.clique.assign(clique.begin(), clique.end());
  const int omega = p.omega();
  p.singles.assign(omega, VertexSet(n));
  for (const LexPair& pair : lex_pairs(omega)) {
    p.cells.emplace(pair, VertexSet(n));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (a.contains(v)) continue;
    const std::vector<int> missed = missed_positions(g, p, v);
    if (missed.empty()) {
      throw PreconditionError("vertex " + std::to_string(v) +
                              " extends A to a larger clique");
    }
    if (missed.size() == 1) {
      p.singles[missed[0] - 1].insert(v);
    } else {
      p.cells.at({missed[0], missed[1]}).insert(v);
    }
  }
  for (const auto& [pair, cell] : p.cells) {
    VertexSet core = cell;
    for (Vertex v : cell) {
      if (!g.neighbors(v).intersects(cell)) core.erase(v);
    }
    p.cores.emplace(pair, core);
    std::vector<int> free;
    for (int k = 1; k <= omega; ++k) {
      if (!g.neighbors(p.v(k)).intersects(core)) free.push_back(k);
    }
    p.free.emplace(pair, std::move(free));
  }
  return p;
}

WBCPartition build_partition(const Graph& g) {
  if (g.order() == 0) return {};
  return build_partition(g, max_clique(g).vertices());
}

nlohmann::json to_json(const WBCPartition& p) {
  nlohmann::json singles = nlohmann::json::object();
  for (int k = 1; k <= p.omega(); ++k) {
    singles[std::to_string(k)] = p.single(k).to_vector();
  }
  nlohmann::json cells = nlohmann::json::object();
  nlohmann::json cores = nlohmann::json::object();
  nlohmann::json free = nlohmann::json::object();
  for (const auto& [pair, cell] : p.cells) {
    cells[pair.key()] = cell.to_vector();
    cores[pair.key()] = p.cores.at(pair).to_vector();
    free[pair.key()] = p.free.at(pair);
  }
  return {{"A", p.clique},
          {"I", std::move(singles)},
          {"C", std::move(cells)},
          {"Cprime", std::move(cores)},
          {"D", std::move(free)}};
}

bool CheckReport::passed() const {
  return status == CheckStatus::kRan &&
         std::all_of(entries.begin(), entries.end(),
                     [](const CheckEntry& e) { return e.passed; });
}

int CheckReport::failures() const {
  return static_cast<int>(std::count_if(
      entries.begin(), entries.end(),
      [](const CheckEntry& e) { return !e.passed; }));
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const CheckEntry& e : r.entries) {
    nlohmann::json item = {{"clause", e.clause},
                           {"passed", e.passed},
                           {"bindings", e.bindings}};
    if (!e.passed) {
      item["witness"] = e.witness;
      if (!e.detail.empty()) item["detail"] = e.detail;
    }
    entries.push_back(std::move(item));
  }
  return {{"check", r.check},
          {"status", r.status == CheckStatus::kRan ? "ran" : "refused"},
          {"precondition_met", r.precondition_met},
          {"passed", r.passed()},
          {"failures", r.failures()},
          {"note", r.note},
          {"entries", std::move(entries)}};
}

namespace {

// Accumulates one entry per clause binding; the first violation found for a
// binding becomes its witness.
class Recorder {
 public:
  explicit Recorder(CheckReport& report) : report_(report) {}

  std::size_t open(std::string clause, std::map<std::string, int> bindings) {
    report_.entries.push_back({std::move(clause), true, std::move(bindings), {}, {}});
    return report_.entries.size() - 1;
  }

  void fail(std::size_t entry, std::vector<Vertex> witness,
            std::string detail) {
    CheckEntry& e = report_.entries[entry];
    if (!e.passed) return;
    e.passed = false;
    e.witness = std::move(witness);
    e.detail = std::move(detail);
  }

 private:
  CheckReport& report_;
};

std::map<std::string, int> cell_binding(const LexPair& pair) {
  return {{"i", pair.i}, {"j", pair.j}};
}

// An edge between s and t, if any.
std::optional<Edge> cross_edge(const Graph& g, const VertexSet& s,
                               const VertexSet& t) {
  for (Vertex a : s) {
    const VertexSet hit = g.neighbors(a) & t;
    if (!hit.empty()) return Edge{a, hit.first()};
  }
  return std::nullopt;
}

// A non-adjacent pair between s and t, if any.
std::optional<Edge> cross_non_edge(const Graph& g, const VertexSet& s,
                                   const VertexSet& t) {
  for (Vertex a : s) {
    const VertexSet miss = t - g.neighbors(a);
    if (!miss.empty()) return Edge{a, miss.first()};
  }
  return std::nullopt;
}

// If any vertex of `source` sees v_l, every vertex of `target` must.
void check_uniform_attachment(const Graph& g, const WBCPartition& p,
                              const VertexSet& source, const VertexSet& target,
                              int l, Recorder& rec, std::size_t e) {
  const VertexSet nbrs = g.neighbors(p.v(l));
  const VertexSet seeing = source & nbrs;
  if (seeing.empty()) return;
  const VertexSet missing = target - nbrs;
  if (!missing.empty()) {
    rec.fail(e, {seeing.first(), missing.first(), p.v(l)},
                   "v_" + std::to_string(l) + " sees " +
                       std::to_string(seeing.first()) + " but not " +
                       std::to_string(missing.first()));
  }
}

const Pattern& pattern(const char* name) {
  static const Pattern p3 = named_pattern("p3");
  static const Pattern p4 = named_pattern("p4");
  static const Pattern p3up2 = named_pattern("p3up2");
  static const Pattern gem = named_pattern("gem");
  const std::string key = name;
  if (key == "p3") return p3;
  if (key == "p4") return p4;
  if (key == "p3up2") return p3up2;
  return gem;
}

}  // namespace

CheckReport check_fact1(const Graph& g, const WBCPartition& p) {
  CheckReport report{"fact1", CheckStatus::kRan, true, {}, {}};
  report.precondition_met = !find_induced(g, pattern("p3up2")).has_value();
  if (!report.precondition_met) {
    report.note = "graph contains an induced P3uP2; failures are permitted";
  }
  Recorder rec(report);
  for (const auto& [pair, cell] : p.cells) {
    const std::size_t p3 = rec.open("fact1.i", cell_binding(pair));
    if (auto w = find_induced(g, pattern("p3"), cell)) {
      rec.fail(p3, w->embedding, "induced P3 inside the cell");
    }
    const std::size_t nb = rec.open("fact1.ii", cell_binding(pair));
    for (Vertex a : cell) {
      for (int k = 1; k <= pair.j; ++k) {
        if (k == pair.i || k == pair.j) continue;
        if (!g.adjacent(a, p.v(k))) {
          rec.fail(nb, {a, p.v(k)},
                         "cell vertex misses v_" + std::to_string(k));
        }
      }
    }
  }
  return report;
}

CheckReport check_lemma_gem(const Graph& g, const WBCPartition& p) {
  CheckReport report{"lemma_gem", CheckStatus::kRan, true, {}, {}};
  report.precondition_met = !find_induced(g, pattern("gem")).has_value();
  if (!report.precondition_met) {
    report.note = "graph contains an induced gem; failures are permitted";
  }
  Recorder rec(report);
  for (const auto& [pair, cell] : p.cells) {
    if (pair.j < 3) continue;
    const auto binding = cell_binding(pair);

    const std::size_t p4 = rec.open("lemma_gem.i", binding);
    if (auto w = find_induced(g, pattern("p4"), cell)) {
      rec.fail(p4, w->embedding, "induced P4 inside the cell");
    }

    const std::size_t attach = rec.open("lemma_gem.ii", binding);
    const std::size_t bound = rec.open("lemma_gem.iv", binding);
    for (const VertexSet& comp : components(g, cell)) {
      for (int l = 1; l <= p.omega(); ++l) {
        check_uniform_attachment(g, p, comp, comp, l, rec, attach);
      }
      const CliqueResult inner = max_clique(g, comp);
      const int free = p.omega() -
                       static_cast<int>(adjacent_positions(g, p, comp).size());
      if (inner.omega > free) {
        rec.fail(bound, inner.vertices(),
                       "component clique " + std::to_string(inner.omega) +
                           " exceeds " + std::to_string(free) +
                           " non-adjacent clique vertices");
      }
    }

    const std::size_t singles = rec.open("lemma_gem.iii", binding);
    for (Vertex a : cell) {
      for (int l : missed_positions(g, p, a)) {
        const VertexSet hit = g.neighbors(a) & p.single(l);
        if (!hit.empty()) {
          rec.fail(singles, {a, hit.first()},
                         "cell vertex missing v_" + std::to_string(l) +
                             " has a neighbour in I_" + std::to_string(l));
        }
      }
    }
  }
  return report;
}

CheckReport check_lemma_class(const Graph& g, const WBCPartition& p) {
  CheckReport report{"lemma_class", CheckStatus::kRan, true, {}, {}};
  if (p.omega() < 3) {
    report.status = CheckStatus::kRefused;
    report.note = "requires omega >= 3";
    return report;
  }
  report.precondition_met = is_class_member(g).member;
  if (!report.precondition_met) {
    report.note = "graph is not {P3uP2, gem}-free; failures are permitted";
  }
  Recorder rec(report);
  const int omega = p.omega();
  for (const auto& [pair, cell] : p.cells) {
    if (pair.j < 3) continue;
    const auto [i, j] = pair;
    const auto binding = cell_binding(pair);
    const VertexSet& core = p.cores.at(pair);

    const std::size_t attach = rec.open("lemma_class.i", binding);
    for (int l = 1; l <= omega; ++l) {
      check_uniform_attachment(g, p, cell, core, l, rec, attach);
    }

    const std::size_t bound = rec.open("lemma_class.ii", binding);
    const CliqueResult inner = max_clique(g, core);
    const int free = static_cast<int>(p.free.at(pair).size());
    if (inner.omega > free) {
      rec.fail(bound, inner.vertices(),
                     "core clique " + std::to_string(inner.omega) +
                         " exceeds |D| = " + std::to_string(free));
    }

    const std::size_t empty = rec.open("lemma_class.iii", binding);
    auto expect_no_edge = [&](const LexPair& other) {
      if (auto e = cross_edge(g, cell, p.cells.at(other))) {
        rec.fail(empty, {e->first, e->second},
                       "edge between C_" + pair.key() + " and C_" +
                           other.key());
      }
    };
    for (int l = 3; l <= omega; ++l) {
      if (l != j && l > i) expect_no_edge({i, l});
      if (l > j) expect_no_edge({j, l});
    }
    if (j >= 4) {
      for (int k = 1; k < j; ++k) {
        if (k != i) expect_no_edge({k, j});
      }
    }

    const std::size_t rows = rec.open("lemma_class.iv", binding);
    if (!core.empty()) {
      auto expect_empty = [&](const VertexSet& s, const std::string& what) {
        if (!s.empty()) {
          rec.fail(rows, {core.first(), s.first()},
                         "C'_" + pair.key() + " nonempty but " + what +
                             " is not empty");
        }
      };
      for (int l = j + 1; l <= omega; ++l) {
        expect_empty(p.cell(i, l), "C_" + LexPair{i, l}.key());
        expect_empty(p.cell(j, l), "C_" + LexPair{j, l}.key());
      }
      for (int l = std::max(i + 1, 3); l < j; ++l) {
        expect_empty(p.core(i, l), "C'_" + LexPair{i, l}.key());
      }
      if (j >= 4) {
        for (int k = 1; k < j; ++k) {
          if (k != i) expect_empty(p.cell(k, j), "C_" + LexPair{k, j}.key());
        }
      }
    }
  }
  return report;
}

CheckReport check_claim1(const Graph& g, const WBCPartition& p) {
  CheckReport report{"claim1", CheckStatus::kRan, true, {}, {}};
  if (p.omega() < 3) {
    report.status = CheckStatus::kRefused;
    report.note = "requires omega >= 3";
    return report;
  }
  report.precondition_met = is_class_member(g).member;
  if (!report.precondition_met) {
    report.note = "graph is not {P3uP2, gem}-free; failures are permitted";
  }
  Recorder rec(report);
  const int n = g.order();
  const int omega = p.omega();
  VertexSet row_cores(n);
  for (int l = 3; l <= omega; ++l) {
    row_cores |= p.core(1, l);
    row_cores |= p.core(2, l);
  }
  for (const auto& [pair, cell] : p.cells) {
    if (pair.i < 3 || cell.empty()) continue;
    const std::size_t e = rec.open("claim1", cell_binding(pair));
    VertexSet target = cell;
    target.insert(p.v(pair.i));
    target.insert(p.v(pair.j));
    if (auto miss = cross_non_edge(g, row_cores, target)) {
      rec.fail(e, {miss->first, miss->second},
                     "row-1/2 core vertex not adjacent to a vertex of "
                     "{v_r, v_s} u C_" + pair.key());
    }
  }
  return report;
}

}  // namespace gemcolor
