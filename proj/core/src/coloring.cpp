#include "gemcolor/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "gemcolor/errors.hpp"

namespace gemcolor {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
  for (int c : colors_) {
    if (c < 0) throw MalformedInput("negative color " + std::to_string(c));
  }
}

void Coloring::set(Vertex v, int color) {
  if (color < 0) throw MalformedInput("negative color");
  colors_.at(v) = color;
}

bool Coloring::is_total() const {
  return std::none_of(colors_.begin(), colors_.end(),
                      [](int c) { return c == 0; });
}

int Coloring::num_colors() const {
  return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

int Coloring::distinct_colors() const {
  std::set<int> used(colors_.begin(), colors_.end());
  used.erase(0);
  return static_cast<int>(used.size());
}

Coloring Coloring::normalized() const {
  std::vector<int> remap(static_cast<std::size_t>(num_colors()) + 1, 0);
  int next = 0;
  std::vector<int> out(colors_.size());
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    const int c = colors_[v];
    if (c == 0) continue;
    if (remap[c] == 0) remap[c] = ++next;
    out[v] = remap[c];
  }
  return Coloring(std::move(out));
}

VertexSet Coloring::color_class(int color) const {
  VertexSet s(order());
  for (Vertex v = 0; v < order(); ++v) {
    if (colors_[v] == color) s.insert(v);
  }
  return s;
}

ProperCheck verify_proper(const Graph& g, const Coloring& c) {
  if (c.order() != g.order()) {
    throw MalformedInput("coloring covers " + std::to_string(c.order()) +
                         " vertices but the graph has " +
                         std::to_string(g.order()));
  }
  if (!c.is_total()) throw MalformedInput("coloring is partial");
  for (const auto& [u, v] : g.edges()) {
    if (c[u] == c[v]) return {false, Edge{u, v}};
  }
  return {true, std::nullopt};
}

Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) {
    throw MalformedInput("greedy order must list every vertex exactly once");
  }
  VertexSet seen(n);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen.contains(v)) {
      throw MalformedInput("greedy order is not a permutation");
    }
    seen.insert(v);
  }
  Coloring c = Coloring::blank(n);
  std::vector<bool> taken;
  for (Vertex v : order) {
    taken.assign(static_cast<std::size_t>(n) + 2, false);
    for (Vertex u : g.neighbors(v)) taken[c[u]] = true;
    int color = 1;
    while (taken[color]) ++color;
    c.set(v, color);
  }
  return c;
}

Coloring greedy_coloring(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  return greedy_coloring(g, order);
}

}  // namespace gemcolor
