#ifndef GEMCOLOR_COLORER_HPP
#define GEMCOLOR_COLORER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gemcolor/coloring.hpp"
#include "gemcolor/errors.hpp"
#include "gemcolor/graph.hpp"
#include "gemcolor/partition.hpp"

namespace gemcolor {

/// Which branch of the 2w construction colored the cells outside C_{1,2}.
enum class ProofCase {
  kOmegaAtMostTwo,
  kCase1,        // some cell (r, s) with r >= 3 is nonempty
  kCase2Simple,  // rows 1 and 2 only; the two D-pools do not collide
  kCase21,       // rows 1 and 2 only; the D-pools share >= 2 positions
  kCase22,       // rows 1 and 2 only; the D-pools share exactly 1 position
};

std::string_view case_name(ProofCase c);

/// How the components of C_{1,2} were colored.
enum class CellMode {
  kEmpty,
  kShifted,  // colors w+2..2w; no component reaches size w
  kFull,     // colors w+1..2w; color w+1 was still unused
  kPivot,    // one vertex z per size-w component takes w+1
};

std::string_view cell_mode_name(CellMode m);

/// Colors handed to one clique component, in ascending vertex order.
struct PoolAssignment {
  std::string cell;   // "i,j" (core or cell label)
  std::string pool;   // which pool the colors came from
  std::vector<Vertex> component;
  std::vector<int> colors;
};

/// A predicate the construction relies on, re-evaluated at run time.
struct TraceCheck {
  std::string name;
  bool held = true;
  std::string detail;
};

struct ColoringTrace {
  std::vector<Vertex> clique;
  ProofCase proof_case = ProofCase::kOmegaAtMostTwo;
  /// Rows j, l >= 3 holding the nonempty cores C'_{1,j}, C'_{2,l} (Case 2).
  std::optional<int> row_one;
  std::optional<int> row_two;
  /// Largest components of C'_{1,j} and C'_{2,l} (Case 2.1 only).
  std::vector<Vertex> s;
  std::vector<Vertex> t;
  std::vector<PoolAssignment> pools;
  /// Vertices of C'_{1,j} that received color w+1 (Case 2.2).
  std::vector<Vertex> fresh_vertices;
  CellMode cell_mode = CellMode::kEmpty;
  /// One vertex per size-w component of C_{1,2} colored w+1 (pivot mode).
  std::vector<Vertex> pivots;
  std::vector<TraceCheck> checks;
  bool verified = false;

  bool all_checks_held() const;
};

nlohmann::json to_json(const ColoringTrace& t);

/// The coloring failed its own verification, or a step the construction
/// depends on could not be carried out. Either signals an implementation bug
/// or a counterexample to the construction; no coloring is returned.
class CertificationFailure : public Error {
 public:
  CertificationFailure(const std::string& what, std::optional<Edge> conflict,
                       nlohmann::json trace);
  const std::optional<Edge>& conflict() const { return conflict_; }
  const nlohmann::json& trace() const { return trace_; }

 private:
  std::optional<Edge> conflict_;
  nlohmann::json trace_;
};

struct TwoOmegaResult {
  Coloring coloring;
  int omega = 0;
  ColoringTrace trace;
};

/// Proper coloring of a {P3 u P2, gem}-free graph with at most 2w colors.
///
/// v_k and the vertices missing only v_k get color k; the cells are then
/// colored case by case, finishing with C_{1,2}. Colors keep their role
/// (1..w clique positions, w+1..2w fresh) and are not renumbered.
/// Throws ClassViolation for inputs outside the class and
/// CertificationFailure if the result is not a proper <= 2w coloring.
TwoOmegaResult color_two_omega(const Graph& g);

struct ThreeOmegaResult {
  Coloring coloring;
  int omega = 0;
  /// <{v_k, I_k : k >= 2} u cells with i >= 2>
  VertexSet upper;
  /// <v_1 u I_1 u cells (1, j >= 3)>
  VertexSet lower;
  int upper_colors = 0;
  int lower_colors = 0;
  int cell_colors = 0;
  bool upper_p4_free = false;
  bool lower_p4_free = false;
};

/// Proper coloring with at most 3w - 2 colors: two P4-free pieces colored
/// optimally on disjoint ranges plus C_{1,2} on fresh colors.
ThreeOmegaResult color_three_omega(const Graph& g);

/// Optimal coloring of a P4-free graph via its cotree: disjoint unions reuse
/// colors, joins stack them. Throws ClassViolation carrying an induced P4.
Coloring color_cograph(const Graph& g);
/// Colors only the vertices of `within` (others stay 0), using 1..omega of
/// the induced subgraph.
Coloring color_cograph(const Graph& g, const VertexSet& within);

/// JSON coloring report shared by the CLI and the suite.
nlohmann::json coloring_json(std::string_view algorithm, const Coloring& c,
                             int omega, int bound, bool verified);

}  // namespace gemcolor

#endif  // GEMCOLOR_COLORER_HPP
