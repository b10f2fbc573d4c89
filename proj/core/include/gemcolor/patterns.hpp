#ifndef GEMCOLOR_PATTERNS_HPP
#define GEMCOLOR_PATTERNS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gemcolor/errors.hpp"
#include "gemcolor/graph.hpp"

namespace gemcolor {

/// A small graph searched for as an induced subgraph.
struct Pattern {
  static constexpr int kMaxOrder = 8;

  std::string name;
  Graph graph;
};

/// Looks up a pattern by its CLI name (case-insensitive): p2, p3, p4, k3,
/// 2k2, p3up2, c4, c5, gem, diamond, hvn, k1+c4, co-p3up2, k5-e, k5.
/// Throws UnknownName.
Pattern named_pattern(std::string_view name);
/// Names accepted by named_pattern, in canonical spelling.
std::vector<std::string> pattern_names();
/// Wraps a user-supplied graph; throws UnsupportedPattern above 8 vertices.
Pattern custom_pattern(Graph graph, std::string name);
/// Comma-separated list of pattern names, e.g. "p3up2,gem".
std::vector<Pattern> parse_pattern_list(std::string_view list);
/// The {P3 u P2, gem} family.
std::vector<Pattern> default_family();

/// An induced copy of a pattern: embedding[p] is the host vertex playing
/// pattern vertex p.
struct PatternWitness {
  std::string pattern;
  std::vector<Vertex> embedding;
};

/// Finds an induced copy of `pattern` in `g`.
///
/// Pattern vertices are matched in degree-descending order (ties by index)
/// and host candidates are tried in ascending order, so the returned
/// embedding is the lexicographically least one when read in that matching
/// order. Throws UnsupportedPattern for patterns above 8 vertices.
std::optional<PatternWitness> find_induced(const Graph& g,
                                           const Pattern& pattern);
/// Same search restricted to the subgraph induced by `within`; the witness
/// uses host vertex numbers.
std::optional<PatternWitness> find_induced(const Graph& g,
                                           const Pattern& pattern,
                                           const VertexSet& within);

struct Membership {
  bool member = true;
  std::optional<PatternWitness> witness;
};

/// Tests the patterns in order and reports the first one that embeds.
Membership is_class_member(const Graph& g, std::span<const Pattern> forbidden);
/// Membership in the {P3 u P2, gem}-free class.
Membership is_class_member(const Graph& g);

/// P3-free iff every connected component is a clique.
bool is_p3_free(const Graph& g);
bool is_p4_free(const Graph& g);

/// Re-checks that `w.embedding` induces a copy of `pattern` in `g` under the
/// recorded vertex correspondence.
bool witness_is_valid(const Graph& g, const Pattern& pattern,
                      const PatternWitness& w);

/// Permutation search with degree-sequence pruning; meant for graphs of a
/// dozen vertices or fewer. perm[v] is the image in `b` of vertex v of `a`.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a,
                                                    const Graph& b);
bool are_isomorphic(const Graph& a, const Graph& b);

/// Input graph lies outside the required class.
class ClassViolation : public PreconditionError {
 public:
  explicit ClassViolation(PatternWitness witness);
  const PatternWitness& witness() const { return witness_; }

 private:
  PatternWitness witness_;
};

}  // namespace gemcolor

#endif  // GEMCOLOR_PATTERNS_HPP
