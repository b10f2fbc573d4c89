#ifndef GEMCOLOR_MATCHING_HPP
#define GEMCOLOR_MATCHING_HPP

#include <vector>

#include "gemcolor/graph.hpp"

namespace gemcolor {

/// Maximum-cardinality matching in a general graph (Edmonds' augmenting
/// paths with blossom contraction, O(n^3)). mate[v] is v's partner or -1.
std::vector<Vertex> maximum_matching(const Graph& g);

/// Number of edges in a mate vector produced by maximum_matching.
int matching_size(const std::vector<Vertex>& mate);

}  // namespace gemcolor

#endif  // GEMCOLOR_MATCHING_HPP
