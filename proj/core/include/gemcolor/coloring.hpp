#ifndef GEMCOLOR_COLORING_HPP
#define GEMCOLOR_COLORING_HPP

#include <optional>
#include <span>
#include <vector>

#include "gemcolor/graph.hpp"

namespace gemcolor {

/// Vertex -> color map with colors 1, 2, ...; 0 marks an uncolored vertex
/// while a coloring is under construction.
class Coloring {
 public:
  Coloring() = default;
  /// Throws MalformedInput on a negative color.
  explicit Coloring(std::vector<int> colors);
  /// All vertices uncolored.
  static Coloring blank(int order) { return Coloring(std::vector<int>(order, 0)); }

  int order() const { return static_cast<int>(colors_.size()); }
  int operator[](Vertex v) const { return colors_.at(v); }
  void set(Vertex v, int color);
  const std::vector<int>& colors() const { return colors_; }

  bool is_total() const;
  /// Largest color in use.
  int num_colors() const;
  /// Number of distinct colors in use.
  int distinct_colors() const;
  /// Colors renumbered 1, 2, ... in order of first occurrence by vertex.
  Coloring normalized() const;
  VertexSet color_class(int color) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
};

struct ProperCheck {
  bool proper = true;
  /// Lexicographically least monochromatic edge (u < v) when improper.
  std::optional<Edge> conflict;
};

/// Throws MalformedInput if the coloring is partial or sized for a
/// different graph.
ProperCheck verify_proper(const Graph& g, const Coloring& c);

/// First-fit along `order`; throws MalformedInput if `order` is not a
/// permutation of the vertices.
Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order);
Coloring greedy_coloring(const Graph& g);

}  // namespace gemcolor

#endif  // GEMCOLOR_COLORING_HPP
