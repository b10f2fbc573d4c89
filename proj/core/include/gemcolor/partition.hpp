#ifndef GEMCOLOR_PARTITION_HPP
#define GEMCOLOR_PARTITION_HPP

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gemcolor/graph.hpp"

namespace gemcolor {

/// A pair (i, j) of 1-based clique positions with i < j. The defaulted
/// ordering is the lexicographic order on such pairs.
struct LexPair {
  int i = 1;
  int j = 2;

  friend auto operator<=>(const LexPair&, const LexPair&) = default;
  /// "i,j"
  std::string key() const;
};

/// All pairs 1 <= i < j <= omega in lexicographic order.
std::vector<LexPair> lex_pairs(int omega);

/// Decomposition of V(G) relative to an ordered maximum clique
/// A = (v_1, ..., v_w). Every vertex outside A misses at least one v_k:
///
///   singles[k]      vertices missing exactly v_k           (I_k)
///   cells[(i,j)]    vertices whose two least missed clique
///                   positions are i < j                    (C_{i,j})
///   cores[(i,j)]    cells[(i,j)] minus the vertices isolated
///                   in the subgraph it induces             (C'_{i,j})
///   free[(i,j)]     clique positions with no neighbour in
///                   cores[(i,j)]                           (D_{i,j})
///
/// Clique positions are 1-based throughout so that they double as the
/// colors the 2w-coloring assigns to v_k and its single set.
struct WBCPartition {
  std::vector<Vertex> clique;
  std::vector<VertexSet> singles;  // index k-1
  std::map<LexPair, VertexSet> cells;
  std::map<LexPair, VertexSet> cores;
  std::map<LexPair, std::vector<int>> free;

  int omega() const { return static_cast<int>(clique.size()); }
  Vertex v(int position) const { return clique.at(position - 1); }
  const VertexSet& single(int position) const { return singles.at(position - 1); }
  const VertexSet& cell(int i, int j) const { return cells.at({i, j}); }
  const VertexSet& core(int i, int j) const { return cores.at({i, j}); }
  const std::vector<int>& free_positions(int i, int j) const {
    return free.at({i, j});
  }
  VertexSet clique_set(int order) const;

  friend bool operator==(const WBCPartition&, const WBCPartition&) = default;
};

/// Builds the partition for the given clique order. Throws
/// PreconditionError if `clique` is not a clique or not maximum.
WBCPartition build_partition(const Graph& g, std::span<const Vertex> clique);
/// Uses the max_clique witness in ascending vertex order as (v_1..v_w).
WBCPartition build_partition(const Graph& g);

/// Clique positions (1-based, ascending) not adjacent to v.
std::vector<int> missed_positions(const Graph& g, const WBCPartition& p,
                                  Vertex v);
/// Clique positions adjacent to at least one vertex of s.
std::vector<int> adjacent_positions(const Graph& g, const WBCPartition& p,
                                    const VertexSet& s);

/// {"A": [...], "I": {"k": [...]}, "C": {"i,j": [...]}, "Cprime": {...},
///  "D": {"i,j": [positions]}}
nlohmann::json to_json(const WBCPartition& p);

// ---------------------------------------------------------------------------
// Structural checks. Each clause is evaluated per cell (or per quantified
// binding) and recorded with a witness when it fails. Failures are report
// entries, not exceptions.

struct CheckEntry {
  std::string clause;
  bool passed = true;
  std::map<std::string, int> bindings;
  std::vector<Vertex> witness;
  std::string detail;
};

enum class CheckStatus { kRan, kRefused };

struct CheckReport {
  std::string check;
  CheckStatus status = CheckStatus::kRan;
  /// False when the graph is outside the class the statement is made for;
  /// failures are then expected and not contradictions.
  bool precondition_met = true;
  std::string note;
  std::vector<CheckEntry> entries;

  bool passed() const;
  int failures() const;
};

nlohmann::json to_json(const CheckReport& r);

/// Cells induce disjoint unions of cliques; a cell vertex sees
/// v_1..v_j except v_i, v_j.
CheckReport check_fact1(const Graph& g, const WBCPartition& p);
/// Gem-free structure of cells with j >= 3.
CheckReport check_lemma_gem(const Graph& g, const WBCPartition& p);
/// Class structure of cells with j >= 3; refused when omega < 3.
CheckReport check_lemma_class(const Graph& g, const WBCPartition& p);
/// Cores of rows 1 and 2 are complete to every nonempty cell (r, s) with
/// r >= 3 and to v_r, v_s; refused when omega < 3.
CheckReport check_claim1(const Graph& g, const WBCPartition& p);

}  // namespace gemcolor

#endif  // GEMCOLOR_PARTITION_HPP
