#ifndef GEMCOLOR_EXACT_HPP
#define GEMCOLOR_EXACT_HPP

#include <vector>

#include "gemcolor/coloring.hpp"
#include "gemcolor/graph.hpp"

namespace gemcolor {

struct CliqueResult {
  int omega = 0;
  VertexSet witness;

  std::vector<Vertex> vertices() const { return witness.to_vector(); }
};

/// Exact maximum clique by branch and bound with greedy-coloring bounds.
///
/// Among all maximum cliques the witness is the one whose ascending vertex
/// list is lexicographically least. Throws PreconditionError on an empty
/// graph.
CliqueResult max_clique(const Graph& g);
/// Maximum clique of the subgraph induced by `within` (empty set -> 0).
CliqueResult max_clique(const Graph& g, const VertexSet& within);

/// alpha(G) = omega(complement of G); 0 for the empty graph.
int independence_number(const Graph& g);

struct ChiResult {
  int chi = 0;
  /// Proper coloring with exactly `chi` colors, normalized so colors appear
  /// in order of first occurrence.
  Coloring witness;
};

inline constexpr int kDefaultChiMaxOrder = 64;

/// Exact chromatic number.
///
/// Iterative deepening on k from omega upward; each k is decided by DSATUR
/// backtracking with the maximum-clique witness precolored and a
/// "next fresh color only" rule for symmetry. Throws SizeGuardrail when
/// the graph has more than `max_order` vertices.
ChiResult chromatic_number(const Graph& g,
                           int max_order = kDefaultChiMaxOrder);

/// Decides k-colorability with the same search; fills `witness` on success.
bool is_k_colorable(const Graph& g, int k, Coloring* witness = nullptr);

/// chi(G) for graphs with alpha(G) <= 2: color classes have at most two
/// vertices, so chi = n - (maximum matching in the complement).
/// Throws PreconditionError when G has an independent set of size 3.
int chi_alpha2_shortcut(const Graph& g);

}  // namespace gemcolor

#endif  // GEMCOLOR_EXACT_HPP
