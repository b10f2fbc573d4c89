#ifndef GEMCOLOR_GENERATORS_HPP
#define GEMCOLOR_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gemcolor/graph.hpp"

namespace gemcolor {

/// Canonical labeled constructions by name: p<n>, c<n>, k<n>, e<n> (edgeless),
/// 2k2, p3up2, gem, diamond, paw, hvn, k1+c4, co-p3up2, k5-e, groetzsch,
/// schlafli-complement, kc5-<m> (complete expansion of C5 with bags of m).
/// Throws UnknownName.
Graph named_graph(std::string_view name);
std::vector<std::string> named_graph_examples();

/// Originals 0..n-1, shadows n..2n-1 (shadow of i is n+i), apex 2n.
Graph mycielskian(const Graph& g);

struct ExpansionSpec {
  Graph base;
  std::vector<int> sizes;
};

struct Expansion {
  Graph graph;
  /// bags[i] is the contiguous vertex range replacing base vertex i.
  std::vector<VertexSet> bags;
};

/// Replaces base vertex i by a clique of sizes[i] vertices and joins two bags
/// completely iff their base vertices are adjacent. Throws PreconditionError
/// on a size-list mismatch or a nonpositive size.
Expansion complete_expansion(const ExpansionSpec& spec);

/// Intersection graph of the 27 lines on a cubic surface, i.e. the
/// complement of the Schlafli graph. Vertices 0..5 are a_1..a_6, 6..11 are
/// b_1..b_6, and 12..26 are c_{ij} for i < j in lexicographic order.
/// Throws ConstructionError if the result is not SRG(27, 10, 1, 5).
Graph schlafli_complement();

struct SrgParameters {
  int v = 0, k = 0, lambda = 0, mu = 0;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// Parameters if g is strongly regular (and neither complete nor edgeless).
std::optional<SrgParameters> srg_parameters(const Graph& g);

enum class SampleStrategy { kReject, kExpand, kPrune };

SampleStrategy parse_strategy(std::string_view name);
std::string_view strategy_name(SampleStrategy s);

/// Random {P3 u P2, gem}-free graph on n vertices, reproducible from
/// (n, seed, strategy):
///   reject  G(n, p) over p in {0.2, 0.35, 0.5, 0.65, 0.8}, 200 draws each,
///           first member wins (n <= 16);
///   expand  complete expansion of C5, C4 or a disjoint union of cliques
///           with random bag sizes summing to n;
///   prune   random n-vertex induced subgraph of a known member.
/// Throws SamplingFailure when the attempt budget runs out.
Graph random_class_member(int n, std::uint64_t seed, SampleStrategy strategy);

/// Metadata written next to generated graphs.
nlohmann::json expansion_sidecar(const ExpansionSpec& spec,
                                 const Expansion& expansion);

}  // namespace gemcolor

#endif  // GEMCOLOR_GENERATORS_HPP
