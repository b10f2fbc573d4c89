#include "reference.hpp"

#include <algorithm>
#include <functional>

namespace gemcolor::reference {

Matrix adjacency(const Graph& g) {
  const int n = g.order();
  Matrix m(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) m[u][v] = g.adjacent(u, v);
  }
  return m;
}

bool contains_induced(const Graph& g, const Graph& pattern) {
  const int n = g.order();
  const int k = pattern.order();
  if (k > n) return false;
  const Matrix a = adjacency(g);
  const Matrix p = adjacency(pattern);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> chosen;
    for (int v = 0; v < n; ++v) {
      if (pick[v]) chosen.push_back(v);
    }
    std::vector<int> perm = chosen;
    do {
      bool match = true;
      for (int x = 0; x < k && match; ++x) {
        for (int y = x + 1; y < k && match; ++y) {
          match = a[perm[x]][perm[y]] == p[x][y];
        }
      }
      if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

Graph p3_plus_p2() {
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
}

Graph gem() {
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

bool is_class_member(const Graph& g) {
  return !contains_induced(g, p3_plus_p2()) && !contains_induced(g, gem());
}

namespace {

int largest_clique(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  int best = 0;
  std::vector<int> current;
  std::function<void(int)> grow = [&](int next) {
    best = std::max(best, static_cast<int>(current.size()));
    for (int v = next; v < n; ++v) {
      bool ok = true;
      for (int u : current) ok = ok && a[u][v];
      if (!ok) continue;
      current.push_back(v);
      grow(v + 1);
      current.pop_back();
    }
  };
  grow(0);
  return best;
}

}  // namespace

int clique_number(const Graph& g) { return largest_clique(adjacency(g)); }

int independence_number(const Graph& g) {
  Matrix a = adjacency(g);
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = 0; v < a.size(); ++v) a[u][v] = u != v && !a[u][v];
  }
  return largest_clique(a);
}

int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  const Matrix a = adjacency(g);
  std::vector<int> color(n, 0);
  for (int k = 1; k <= n; ++k) {
    std::function<bool(int)> assign = [&](int v) {
      if (v == n) return true;
      for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) ok = !(a[u][v] && color[u] == c);
        if (!ok) continue;
        color[v] = c;
        if (assign(v + 1)) return true;
      }
      color[v] = 0;
      return false;
    };
    if (assign(0)) return k;
  }
  return n;
}

int matching_number(const Graph& g) {
  const auto edges = g.edges();
  std::vector<bool> used(g.order(), false);
  std::function<int(std::size_t)> best = [&](std::size_t i) -> int {
    if (i == edges.size()) return 0;
    int skip = best(i + 1);
    const auto [u, v] = edges[i];
    if (used[u] || used[v]) return skip;
    used[u] = used[v] = true;
    const int take = 1 + best(i + 1);
    used[u] = used[v] = false;
    return std::max(skip, take);
  };
  return best(0);
}

bool is_proper(const Graph& g, const std::vector<int>& colors) {
  const int n = g.order();
  if (static_cast<int>(colors.size()) != n) return false;
  for (int u = 0; u < n; ++u) {
    if (colors[u] < 1) return false;
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) && colors[u] == colors[v]) return false;
    }
  }
  return true;
}

Partition partition(const Graph& g, const std::vector<Vertex>& clique) {
  const int n = g.order();
  const int w = static_cast<int>(clique.size());
  const Matrix a = adjacency(g);
  Partition out;
  out.singles.assign(w, {});
  for (int i = 1; i <= w; ++i) {
    for (int j = i + 1; j <= w; ++j) {
      out.cells[{i, j}] = {};
      out.cores[{i, j}] = {};
    }
  }
  for (int v = 0; v < n; ++v) {
    if (std::find(clique.begin(), clique.end(), v) != clique.end()) continue;
    std::vector<int> missed;
    for (int k = 1; k <= w; ++k) {
      if (!a[v][clique[k - 1]]) missed.push_back(k);
    }
    if (missed.size() == 1) {
      out.singles[missed[0] - 1].push_back(v);
    } else if (missed.size() >= 2) {
      out.cells[{missed[0], missed[1]}].push_back(v);
    }
  }
  for (auto& [key, cell] : out.cells) {
    auto& core = out.cores[key];
    for (int v : cell) {
      for (int u : cell) {
        if (a[u][v]) {
          core.push_back(v);
          break;
        }
      }
    }
    auto& free = out.free[key];
    for (int k = 1; k <= w; ++k) {
      bool seen = false;
      for (int v : core) seen = seen || a[v][clique[k - 1]];
      if (!seen) free.push_back(k);
    }
  }
  return out;
}

}  // namespace gemcolor::reference
