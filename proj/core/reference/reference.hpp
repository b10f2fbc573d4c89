#ifndef GEMCOLOR_REFERENCE_HPP
#define GEMCOLOR_REFERENCE_HPP

#include <map>
#include <utility>
#include <vector>

#include "gemcolor/graph.hpp"

/// Exhaustive implementations used to cross-check the search code. They
/// read adjacency only through Graph::adjacent and are exponential; keep the
/// inputs small.
namespace gemcolor::reference {

using Matrix = std::vector<std::vector<bool>>;

Matrix adjacency(const Graph& g);

/// Tries every |P|-subset of V(g) under every bijection.
bool contains_induced(const Graph& g, const Graph& pattern);

/// Hand-built copies of the two forbidden graphs.
Graph p3_plus_p2();
Graph gem();
bool is_class_member(const Graph& g);

int clique_number(const Graph& g);
int independence_number(const Graph& g);

/// Smallest k admitting a proper k-coloring, trying all k^n assignments
/// with early conflict rejection.
int chromatic_number(const Graph& g);

/// Maximum matching size by recursion over the edge list.
int matching_number(const Graph& g);

/// True iff c has one color >= 1 per vertex and no monochromatic edge.
bool is_proper(const Graph& g, const std::vector<int>& colors);

/// The decomposition around an ordered maximum clique, recomputed from the
/// definitions with plain vectors (positions 1-based).
struct Partition {
  std::vector<std::vector<Vertex>> singles;
  std::map<std::pair<int, int>, std::vector<Vertex>> cells;
  std::map<std::pair<int, int>, std::vector<Vertex>> cores;
  std::map<std::pair<int, int>, std::vector<int>> free;
};

Partition partition(const Graph& g, const std::vector<Vertex>& clique);

}  // namespace gemcolor::reference

#endif  // GEMCOLOR_REFERENCE_HPP
