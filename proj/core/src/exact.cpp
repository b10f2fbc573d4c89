#include "gemcolor/exact.hpp"

#include <algorithm>
#include <string>

#include "gemcolor/errors.hpp"
#include "gemcolor/matching.hpp"

namespace gemcolor {

namespace {

// Sequential greedy coloring of <p> in ascending vertex order, emitted color
// class by color class. bound[i] is the color of order[i]; any clique inside
// {order[0..i]} has at most bound[i] vertices.
void color_sort(const Graph& g, const VertexSet& p, std::vector<Vertex>& order,
                std::vector<int>& bound) {
  order.clear();
  bound.clear();
  VertexSet uncolored = p;
  int color = 0;
  while (!uncolored.empty()) {
    ++color;
    VertexSet available = uncolored;
    while (!available.empty()) {
      const Vertex v = available.first();
      available.erase(v);
      available -= g.neighbors(v);
      uncolored.erase(v);
      order.push_back(v);
      bound.push_back(color);
    }
  }
}

int greedy_bound(const Graph& g, const VertexSet& p) {
  VertexSet uncolored = p;
  int color = 0;
  while (!uncolored.empty()) {
    ++color;
    VertexSet available = uncolored;
    while (!available.empty()) {
      const Vertex v = available.first();
      available -= g.neighbors(v);
      available.erase(v);
      uncolored.erase(v);
    }
  }
  return color;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  int omega(const VertexSet& within) {
    best_ = 0;
    current_.clear();
    if (!within.empty()) expand(within);
    return best_;
  }

  // Lexicographically least clique of size `need` inside p.
  bool first_clique(VertexSet p, int need, std::vector<Vertex>& chosen) {
    if (need == 0) return true;
    if (p.size() < need || greedy_bound(g_, p) < need) return false;
    const VertexSet snapshot = p;
    for (Vertex v : snapshot) {
      chosen.push_back(v);
      if (first_clique(p & g_.neighbors(v), need - 1, chosen)) return true;
      chosen.pop_back();
      p.erase(v);
      if (p.size() < need) return false;
    }
    return false;
  }

 private:
  void expand(VertexSet p) {
    std::vector<Vertex> order;
    std::vector<int> bound;
    color_sort(g_, p, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current_.size()) + bound[i] <= best_) return;
      const Vertex v = order[i];
      current_.push_back(v);
      const VertexSet next = p & g_.neighbors(v);
      if (next.empty()) {
        best_ = std::max(best_, static_cast<int>(current_.size()));
      } else {
        expand(next);
      }
      current_.pop_back();
      p.erase(v);
    }
  }

  const Graph& g_;
  int best_ = 0;
  std::vector<Vertex> current_;
};

// DSATUR backtracking for a fixed number of colors.
class KColorSearch {
 public:
  KColorSearch(const Graph& g, int k)
      : g_(g),
        n_(g.order()),
        k_(k),
        colors_(n_, 0),
        counts_(static_cast<std::size_t>(n_) * (k + 1), 0),
        saturation_(n_, 0),
        uncolored_(VertexSet::full(n_)) {}

  bool run(const std::vector<Vertex>& precolored, Coloring* witness) {
    if (static_cast<int>(precolored.size()) > k_) return false;
    int used = 0;
    for (Vertex v : precolored) {
      const int c = ++used;
      if (counts_[index(v, c)] != 0) return false;
      assign(v, c);
    }
    if (!search(used)) return false;
    if (witness != nullptr) *witness = Coloring(colors_);
    return true;
  }

 private:
  std::size_t index(Vertex v, int c) const {
    return static_cast<std::size_t>(v) * (k_ + 1) + c;
  }

  void assign(Vertex v, int c) {
    colors_[v] = c;
    uncolored_.erase(v);
    for (Vertex u : g_.neighbors(v)) {
      if (counts_[index(u, c)]++ == 0) ++saturation_[u];
    }
  }

  void unassign(Vertex v, int c) {
    colors_[v] = 0;
    uncolored_.insert(v);
    for (Vertex u : g_.neighbors(v)) {
      if (--counts_[index(u, c)] == 0) --saturation_[u];
    }
  }

  Vertex pick() const {
    Vertex best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex v : uncolored_) {
      const int sat = saturation_[v];
      if (sat < best_sat) continue;
      const int deg = (g_.neighbors(v) & uncolored_).size();
      if (sat > best_sat || deg > best_deg) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool search(int max_used) {
    const Vertex v = pick();
    if (v == -1) return true;
    if (saturation_[v] >= k_) return false;
    const int limit = std::min(k_, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (counts_[index(v, c)] != 0) continue;
      assign(v, c);
      if (search(std::max(max_used, c))) return true;
      unassign(v, c);
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_;
  std::vector<int> colors_;
  std::vector<int> counts_;
  std::vector<int> saturation_;
  VertexSet uncolored_;
};

// Plain DSATUR heuristic; gives the starting upper bound.
Coloring dsatur_greedy(const Graph& g) {
  const int n = g.order();
  Coloring c = Coloring::blank(n);
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n + 2, false));
  std::vector<int> saturation(n, 0);
  VertexSet uncolored = g.vertices();
  while (!uncolored.empty()) {
    Vertex v = -1;
    int best_sat = -1, best_deg = -1;
    for (Vertex u : uncolored) {
      const int deg = (g.neighbors(u) & uncolored).size();
      if (saturation[u] > best_sat ||
          (saturation[u] == best_sat && deg > best_deg)) {
        v = u;
        best_sat = saturation[u];
        best_deg = deg;
      }
    }
    int color = 1;
    while (seen[v][color]) ++color;
    c.set(v, color);
    uncolored.erase(v);
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u][color]) {
        seen[u][color] = true;
        ++saturation[u];
      }
    }
  }
  return c;
}

bool has_independent_triple(const Graph& g) {
  const VertexSet all = g.vertices();
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexSet non_u = all - g.neighbors(u);
    for (Vertex v = non_u.next(u); v != -1; v = non_u.next(v)) {
      VertexSet common = non_u - g.neighbors(v);
      common -= VertexSet::range(g.order(), 0, v + 1);
      if (!common.empty()) return true;
    }
  }
  return false;
}

}  // namespace

CliqueResult max_clique(const Graph& g, const VertexSet& within) {
  CliqueSearch search(g);
  const int omega = search.omega(within);
  std::vector<Vertex> chosen;
  search.first_clique(within, omega, chosen);
  return {omega, VertexSet(g.order(), std::span<const Vertex>(chosen))};
}

CliqueResult max_clique(const Graph& g) {
  if (g.order() == 0) {
    throw PreconditionError("maximum clique of the empty graph");
  }
  return max_clique(g, g.vertices());
}

int independence_number(const Graph& g) {
  if (g.order() == 0) return 0;
  return max_clique(complement(g)).omega;
}

bool is_k_colorable(const Graph& g, int k, Coloring* witness) {
  if (g.order() == 0) {
    if (witness != nullptr) *witness = Coloring();
    return true;
  }
  if (k <= 0) return false;
  const CliqueResult clique = max_clique(g);
  if (clique.omega > k) return false;
  return KColorSearch(g, k).run(clique.vertices(), witness);
}

ChiResult chromatic_number(const Graph& g, int max_order) {
  if (g.order() > max_order) {
    throw SizeGuardrail("exact chromatic number refused: " +
                        std::to_string(g.order()) + " vertices exceeds the " +
                        std::to_string(max_order) + "-vertex limit");
  }
  if (g.order() == 0) return {0, Coloring()};
  const CliqueResult clique = max_clique(g);
  const Coloring upper = dsatur_greedy(g);
  const int ub = upper.num_colors();
  for (int k = clique.omega; k < ub; ++k) {
    Coloring witness;
    if (KColorSearch(g, k).run(clique.vertices(), &witness)) {
      return {k, witness.normalized()};
    }
  }
  return {ub, upper.normalized()};
}

int chi_alpha2_shortcut(const Graph& g) {
  if (has_independent_triple(g)) {
    throw PreconditionError(
        "alpha <= 2 shortcut requires a graph without independent triples");
  }
  return g.order() - matching_size(maximum_matching(complement(g)));
}

}  // namespace gemcolor
