#include "gemcolor/colorer.hpp"

#include <algorithm>

#include "gemcolor/exact.hpp"
#include "gemcolor/patterns.hpp"

namespace gemcolor {

std::string_view case_name(ProofCase c) {
  switch (c) {
    case ProofCase::kOmegaAtMostTwo:
      return "omega<=2";
    case ProofCase::kCase1:
      return "Case1";
    case ProofCase::kCase2Simple:
      return "Case2-simple";
    case ProofCase::kCase21:
      return "Case2.1";
    case ProofCase::kCase22:
      return "Case2.2";
  }
  return "?";
}

std::string_view cell_mode_name(CellMode m) {
  switch (m) {
    case CellMode::kEmpty:
      return "empty";
    case CellMode::kShifted:
      return "shifted";
    case CellMode::kFull:
      return "full";
    case CellMode::kPivot:
      return "pivot";
  }
  return "?";
}

bool ColoringTrace::all_checks_held() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const TraceCheck& c) { return c.held; });
}

nlohmann::json to_json(const ColoringTrace& t) {
  nlohmann::json pools = nlohmann::json::array();
  for (const PoolAssignment& p : t.pools) {
    pools.push_back({{"cell", p.cell},
                     {"pool", p.pool},
                     {"component", p.component},
                     {"colors", p.colors}});
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const TraceCheck& c : t.checks) {
    nlohmann::json item = {{"name", c.name}, {"held", c.held}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  nlohmann::json out = {{"clique", t.clique},
                        {"case", case_name(t.proof_case)},
                        {"pools", std::move(pools)},
                        {"fresh_vertices", t.fresh_vertices},
                        {"c12_mode", cell_mode_name(t.cell_mode)},
                        {"pivots", t.pivots},
                        {"checks", std::move(checks)},
                        {"verified", t.verified}};
  out["j"] = t.row_one ? nlohmann::json(*t.row_one) : nlohmann::json(nullptr);
  out["l"] = t.row_two ? nlohmann::json(*t.row_two) : nlohmann::json(nullptr);
  if (!t.s.empty() || !t.t.empty()) {
    out["S"] = t.s;
    out["T"] = t.t;
  }
  return out;
}

CertificationFailure::CertificationFailure(const std::string& what,
                                           std::optional<Edge> conflict,
                                           nlohmann::json trace)
    : Error(what), conflict_(conflict), trace_(std::move(trace)) {}

nlohmann::json coloring_json(std::string_view algorithm, const Coloring& c,
                             int omega, int bound, bool verified) {
  nlohmann::json colors = nlohmann::json::object();
  for (Vertex v = 0; v < c.order(); ++v) colors[std::to_string(v)] = c[v];
  return {{"algorithm", algorithm},
          {"num_colors", c.num_colors()},
          {"distinct_colors", c.distinct_colors()},
          {"omega", omega},
          {"bound", bound},
          {"colors", std::move(colors)},
          {"verified", verified}};
}

// ---------------------------------------------------------------------------
// Cograph coloring

namespace {

class CotreeColorer {
 public:
  explicit CotreeColorer(const Graph& g)
      : g_(g), co_(complement(g)), colors_(Coloring::blank(g.order())) {}

  Coloring run(const VertexSet& within) {
    if (!within.empty()) color(within, 0);
    return colors_;
  }

 private:
  // Colors <s> with offset+1 .. offset+k and returns k.
  int color(const VertexSet& s, int offset) {
    if (s.size() == 1) {
      colors_.set(s.first(), offset + 1);
      return 1;
    }
    const std::vector<VertexSet> parts = components(g_, s);
    if (parts.size() > 1) {
      int used = 0;
      for (const VertexSet& part : parts) {
        used = std::max(used, color(part, offset));
      }
      return used;
    }
    const std::vector<VertexSet> co_parts = components(co_, s);
    if (co_parts.size() > 1) {
      int used = 0;
      for (const VertexSet& part : co_parts) used += color(part, offset + used);
      return used;
    }
    // Connected with a connected complement: only possible with an induced P4.
    static const Pattern p4 = named_pattern("p4");
    auto w = find_induced(g_, p4, s);
    throw ClassViolation(w ? *w : PatternWitness{"p4", {}});
  }

  const Graph& g_;
  Graph co_;
  Coloring colors_;
};

}  // namespace

Coloring color_cograph(const Graph& g, const VertexSet& within) {
  return CotreeColorer(g).run(within);
}

Coloring color_cograph(const Graph& g) {
  return color_cograph(g, g.vertices());
}

// ---------------------------------------------------------------------------
// 2w construction

namespace {

std::vector<int> set_difference(const std::vector<int>& a,
                                const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<int> set_intersection(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> color_range(int lo, int hi) {
  std::vector<int> out;
  for (int c = lo; c <= hi; ++c) out.push_back(c);
  return out;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

class TwoOmegaColorer {
 public:
  explicit TwoOmegaColorer(const Graph& g)
      : g_(g),
        n_(g.order()),
        partition_(build_partition(g)),
        omega_(partition_.omega()),
        colors_(Coloring::blank(n_)) {}

  TwoOmegaResult run() {
    trace_.clique = partition_.clique;
    for (int k = 1; k <= omega_; ++k) {
      colors_.set(partition_.v(k), k);
      for (Vertex x : partition_.single(k)) colors_.set(x, k);
    }
    if (omega_ <= 2) {
      trace_.proof_case = ProofCase::kOmegaAtMostTwo;
      if (omega_ == 2) color_clique_cell();
    } else {
      if (has_high_cell()) {
        trace_.proof_case = ProofCase::kCase1;
        color_case_one();
      } else {
        color_case_two();
      }
      color_clique_cell();
    }
    record_position_checks();
    certify();
    return {colors_, omega_, trace_};
  }

 private:
  [[noreturn]] void fail(const std::string& what,
                         std::optional<Edge> conflict = std::nullopt) {
    throw CertificationFailure(what, conflict, to_json(trace_));
  }

  void check(std::string name, bool held, std::string detail = {}) {
    trace_.checks.push_back({std::move(name), held, held ? "" : std::move(detail)});
  }

  bool has_high_cell() const {
    for (const auto& [pair, cell] : partition_.cells) {
      if (pair.i >= 3 && !cell.empty()) return true;
    }
    return false;
  }

  // Gives the component's vertices, in ascending order, the leading colors
  // of `pool`.
  std::vector<int> assign(const VertexSet& component,
                          const std::vector<int>& pool, const std::string& cell,
                          const std::string& pool_name) {
    if (!is_clique(g_, component)) {
      fail("component of " + cell + " is not a clique");
    }
    if (component.size() > static_cast<int>(pool.size())) {
      fail("pool '" + pool_name + "' for " + cell + " has " +
           std::to_string(pool.size()) + " colors but the component needs " +
           std::to_string(component.size()));
    }
    PoolAssignment record{cell, pool_name, component.to_vector(), {}};
    std::size_t next = 0;
    for (Vertex v : component) {
      colors_.set(v, pool[next]);
      record.colors.push_back(pool[next]);
      ++next;
    }
    trace_.pools.push_back(record);
    return record.colors;
  }

  void color_core_from_free(int i, int j) {
    const std::string label = "C'" + LexPair{i, j}.key();
    for (const VertexSet& comp : components(g_, partition_.core(i, j))) {
      assign(comp, partition_.free_positions(i, j), label, "D" + LexPair{i, j}.key());
    }
  }

  void color_case_one() {
    for (const auto& [pair, cell] : partition_.cells) {
      if (pair.j >= 3) color_core_from_free(pair.i, pair.j);
    }
    for (const auto& [pair, cell] : partition_.cells) {
      if (pair.j < 3) continue;
      for (Vertex v : cell - partition_.cores.at(pair)) colors_.set(v, pair.i);
    }
  }

  std::optional<int> unique_core_row(int i) {
    std::optional<int> row;
    for (int p = 3; p <= omega_; ++p) {
      if (partition_.core(i, p).empty()) continue;
      if (row) {
        fail("rows " + std::to_string(*row) + " and " + std::to_string(p) +
             " both hold a nonempty core C'_{" + std::to_string(i) + ",*}");
      }
      row = p;
    }
    return row;
  }

  static VertexSet largest(const std::vector<VertexSet>& comps) {
    const VertexSet* best = &comps.front();
    for (const VertexSet& c : comps) {
      if (c.size() > best->size()) best = &c;
    }
    return *best;
  }

  void color_case_two() {
    const std::optional<int> j = unique_core_row(1);
    const std::optional<int> l = unique_core_row(2);
    trace_.row_one = j;
    trace_.row_two = l;
    trace_.proof_case = ProofCase::kCase2Simple;

    if (j && l) {
      const std::vector<int>& d1 = partition_.free_positions(1, *j);
      const std::vector<int>& d2 = partition_.free_positions(2, *l);
      const std::vector<int> shared = set_intersection(d1, d2);
      if (shared.size() >= 2) {
        trace_.proof_case = ProofCase::kCase21;
        color_case_two_one(*j, *l, shared);
      } else if (shared.size() == 1) {
        trace_.proof_case = ProofCase::kCase22;
        color_case_two_two(*j, *l);
      }
    }
    if (trace_.proof_case == ProofCase::kCase2Simple) {
      if (j) color_core_from_free(1, *j);
      if (l) color_core_from_free(2, *l);
    }

    for (int p = 3; p <= omega_; ++p) {
      VertexSet rest = partition_.cell(1, p);
      if (j) rest -= partition_.core(1, *j);
      for (Vertex v : rest) colors_.set(v, 1);
      rest = partition_.cell(2, p);
      if (l) rest -= partition_.core(2, *l);
      for (Vertex v : rest) colors_.set(v, 2);
    }
  }

  void color_case_two_one(int j, int l, const std::vector<int>& shared) {
    const VertexSet& core1 = partition_.core(1, j);
    const VertexSet& core2 = partition_.core(2, l);
    const std::vector<VertexSet> comps1 = components(g_, core1);
    const std::vector<VertexSet> comps2 = components(g_, core2);
    const VertexSet s = largest(comps1);
    const VertexSet t = largest(comps2);
    trace_.s = s.to_vector();
    trace_.t = t.to_vector();

    const std::vector<int> seen_by_s = adjacent_positions(g_, partition_, s);
    const std::vector<int> seen_by_t = adjacent_positions(g_, partition_, t);
    const std::vector<int> seen_by_core1 =
        adjacent_positions(g_, partition_, core1);
    const std::vector<int> seen_by_core2 =
        adjacent_positions(g_, partition_, core2);
    check("case2.1.disjoint_neighbourhoods",
          set_intersection(seen_by_core1, seen_by_core2).empty(),
          "N_A(C'1,j) = {" + join_ints(seen_by_core1) + "}, N_A(C'2,l) = {" +
              join_ints(seen_by_core2) + "}");
    const int sh = static_cast<int>(shared.size());
    check("case2.1.s_fits",
          s.size() <= static_cast<int>(seen_by_t.size()) + sh,
          "|S| = " + std::to_string(s.size()));
    check("case2.1.t_fits",
          t.size() <= static_cast<int>(seen_by_s.size()) + sh,
          "|T| = " + std::to_string(t.size()));
    check("case2.1.cores_complete", bracket_complete(g_, core1, core2));

    std::vector<int> pool_s = seen_by_t;
    pool_s.insert(pool_s.end(), shared.begin(), shared.end());
    const std::vector<int> s_colors =
        assign(s, pool_s, "C'" + LexPair{1, j}.key(), "N_A(T)+shared");

    std::vector<int> shared_left = shared;
    std::erase_if(shared_left, [&](int c) {
      return std::find(s_colors.begin(), s_colors.end(), c) != s_colors.end();
    });
    std::vector<int> pool_t = seen_by_s;
    pool_t.insert(pool_t.end(), shared_left.begin(), shared_left.end());
    const std::vector<int> t_colors =
        assign(t, pool_t, "C'" + LexPair{2, l}.key(), "N_A(S)+shared");

    for (const VertexSet& comp : comps1) {
      if (comp != s) assign(comp, s_colors, "C'" + LexPair{1, j}.key(), "S");
    }
    for (const VertexSet& comp : comps2) {
      if (comp != t) assign(comp, t_colors, "C'" + LexPair{2, l}.key(), "T");
    }
  }

  void color_case_two_two(int j, int l) {
    const std::vector<int>& d1 = partition_.free_positions(1, j);
    const std::vector<int>& d2 = partition_.free_positions(2, l);
    color_core_from_free(2, l);
    std::vector<int> pool = set_difference(d1, d2);
    pool.push_back(omega_ + 1);
    const std::string label = "C'" + LexPair{1, j}.key();
    for (const VertexSet& comp : components(g_, partition_.core(1, j))) {
      const std::vector<int> used = assign(comp, pool, label, "D1,j\\D2,l+fresh");
      if (used.back() == omega_ + 1) {
        trace_.fresh_vertices.push_back(comp.last());
      }
    }
  }

  bool fresh_color_used() const {
    return std::find(colors_.colors().begin(), colors_.colors().end(),
                     omega_ + 1) != colors_.colors().end();
  }

  void color_clique_cell() {
    const VertexSet& cell = partition_.cell(1, 2);
    if (cell.empty()) {
      trace_.cell_mode = CellMode::kEmpty;
      return;
    }
    const std::vector<VertexSet> comps = components(g_, cell);
    int widest = 0;
    for (const VertexSet& c : comps) widest = std::max(widest, c.size());

    const std::vector<int> shifted = color_range(omega_ + 2, 2 * omega_);
    if (widest <= omega_ - 1) {
      trace_.cell_mode = CellMode::kShifted;
      for (const VertexSet& c : comps) assign(c, shifted, "C1,2", "w+2..2w");
      return;
    }
    if (!fresh_color_used()) {
      trace_.cell_mode = CellMode::kFull;
      const std::vector<int> full = color_range(omega_ + 1, 2 * omega_);
      for (const VertexSet& c : comps) assign(c, full, "C1,2", "w+1..2w");
      return;
    }

    trace_.cell_mode = CellMode::kPivot;
    const VertexSet fresh(n_, std::span<const Vertex>(trace_.fresh_vertices));
    const VertexSet row_cell = partition_.cell(1, *trace_.row_one);
    for (const VertexSet& c : comps) {
      if (c.size() < omega_) {
        assign(c, shifted, "C1,2", "w+2..2w");
        continue;
      }
      bool degree_fact = true;
      for (Vertex a : row_cell) {
        degree_fact = degree_fact && (g_.neighbors(a) & c).size() == c.size() - 1;
      }
      check("c12.row_vertex_misses_one", degree_fact,
            "component at " + std::to_string(c.first()));

      Vertex pivot = -1;
      for (Vertex z : c) {
        if (!g_.neighbors(z).intersects(fresh)) {
          pivot = z;
          break;
        }
      }
      check("c12.pivot_exists", pivot != -1,
            "component at " + std::to_string(c.first()));
      if (pivot == -1) {
        fail("no vertex of a size-w component of C_{1,2} avoids the w+1 "
             "vertices");
      }
      trace_.pivots.push_back(pivot);
      colors_.set(pivot, omega_ + 1);
      VertexSet rest = c;
      rest.erase(pivot);
      assign(rest, shifted, "C1,2", "w+2..2w");
      trace_.pools.back().component.insert(trace_.pools.back().component.begin(),
                                           pivot);
      trace_.pools.back().colors.insert(trace_.pools.back().colors.begin(),
                                        omega_ + 1);
    }
  }

  // Every clique-position color q given from a pool must avoid v_q and I_q.
  void record_position_checks() {
    bool held = true;
    std::string detail;
    for (const PoolAssignment& p : trace_.pools) {
      for (std::size_t k = 0; k < p.component.size(); ++k) {
        const int q = p.colors[k];
        if (q > omega_) continue;
        const Vertex a = p.component[k];
        const bool ok = !g_.adjacent(a, partition_.v(q)) &&
                        !g_.neighbors(a).intersects(partition_.single(q));
        if (!ok && held) {
          held = false;
          detail = "vertex " + std::to_string(a) + " with color " +
                   std::to_string(q);
        }
      }
    }
    check("pool.position_colors_avoid_clique_and_singles", held, detail);
  }

  void certify() {
    if (!colors_.is_total()) fail("construction left vertices uncolored");
    const ProperCheck proper = verify_proper(g_, colors_);
    if (!proper.proper) {
      fail("coloring is not proper at edge (" +
               std::to_string(proper.conflict->first) + "," +
               std::to_string(proper.conflict->second) + ")",
           proper.conflict);
    }
    if (colors_.num_colors() > 2 * omega_) {
      fail("coloring uses color " + std::to_string(colors_.num_colors()) +
           " above 2w = " + std::to_string(2 * omega_));
    }
    trace_.verified = true;
  }

  const Graph& g_;
  int n_;
  WBCPartition partition_;
  int omega_;
  Coloring colors_;
  ColoringTrace trace_;
};

void require_member(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("graph has no vertices");
  Membership m = is_class_member(g);
  if (!m.member) throw ClassViolation(std::move(*m.witness));
}

}  // namespace

TwoOmegaResult color_two_omega(const Graph& g) {
  require_member(g);
  return TwoOmegaColorer(g).run();
}

ThreeOmegaResult color_three_omega(const Graph& g) {
  require_member(g);
  const WBCPartition p = build_partition(g);
  const int n = g.order();
  const int omega = p.omega();

  ThreeOmegaResult out;
  out.omega = omega;
  out.upper = VertexSet(n);
  out.lower = VertexSet(n);
  for (int k = 1; k <= omega; ++k) {
    VertexSet& side = k == 1 ? out.lower : out.upper;
    side.insert(p.v(k));
    side |= p.single(k);
  }
  for (const auto& [pair, cell] : p.cells) {
    if (pair.i >= 2) {
      out.upper |= cell;
    } else if (pair.j >= 3) {
      out.lower |= cell;
    }
  }

  static const Pattern p4 = named_pattern("p4");
  out.upper_p4_free = !find_induced(g, p4, out.upper).has_value();
  out.lower_p4_free = !find_induced(g, p4, out.lower).has_value();
  if (!out.upper_p4_free || !out.lower_p4_free) {
    throw CertificationFailure("a piece of V(G) \\ C_{1,2} contains an induced P4",
                               std::nullopt, nlohmann::json::object());
  }

  const Coloring upper = color_cograph(g, out.upper);
  const Coloring lower = color_cograph(g, out.lower);
  out.upper_colors = upper.num_colors();
  out.lower_colors = lower.num_colors();
  Coloring c = Coloring::blank(n);
  for (Vertex v : out.upper) c.set(v, upper[v]);
  for (Vertex v : out.lower) c.set(v, out.upper_colors + lower[v]);

  const int base = out.upper_colors + out.lower_colors;
  if (omega >= 2) {
    for (const VertexSet& comp : components(g, p.cell(1, 2))) {
      int next = 0;
      for (Vertex v : comp) c.set(v, base + ++next);
      out.cell_colors = std::max(out.cell_colors, next);
    }
  }
  out.coloring = c;

  const ProperCheck proper = verify_proper(g, c);
  if (!proper.proper) {
    throw CertificationFailure("3w-2 coloring is not proper", proper.conflict,
                               nlohmann::json::object());
  }
  if (c.num_colors() > 3 * omega - 2) {
    throw CertificationFailure("3w-2 coloring exceeds its bound", std::nullopt,
                               nlohmann::json::object());
  }
  return out;
}

}  // namespace gemcolor
