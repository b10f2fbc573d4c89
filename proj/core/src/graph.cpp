#include "gemcolor/graph.hpp"

#include <string>

#include "gemcolor/errors.hpp"

namespace gemcolor {

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxOrder) {
    throw MalformedInput("graph order " + std::to_string(n) +
                         " outside [0, " + std::to_string(Graph::kMaxOrder) +
                         "]");
  }
}

}  // namespace

Graph::Graph(std::vector<VertexSet> rows, std::string name)
    : rows_(std::move(rows)), name_(std::move(name)) {
  std::size_t degree_sum = 0;
  for (const VertexSet& row : rows_) degree_sum += row.size();
  edge_count_ = degree_sum / 2;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::string name) {
  check_order(n);
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw MalformedInput("edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ") has an endpoint outside [0," +
                           std::to_string(n) + ")");
    }
    if (u == v) {
      throw MalformedInput("self-loop at vertex " + std::to_string(u));
    }
    rows[u].insert(v);
    rows[v].insert(u);
  }
  return Graph(std::move(rows), std::move(name));
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges,
                        std::string name) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()),
                    std::move(name));
}

Graph Graph::from_rows(std::vector<VertexSet> rows, std::string name) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  for (Vertex v = 0; v < n; ++v) {
    if (rows[v].universe() != n) {
      throw MalformedInput("adjacency row universe mismatch");
    }
    if (rows[v].contains(v)) {
      throw MalformedInput("self-loop at vertex " + std::to_string(v));
    }
    for (Vertex u : rows[v]) {
      if (!rows[u].contains(v)) {
        throw MalformedInput("adjacency rows are not symmetric");
      }
    }
  }
  return Graph(std::move(rows), std::move(name));
}

Graph Graph::with_name(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = rows_[u].next(u); v != -1; v = rows_[u].next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet row = g.neighbors(v).complement();
    row.erase(v);
    rows.push_back(row);
  }
  return Graph::from_rows(std::move(rows),
                          g.name().empty() ? "" : "co-" + g.name());
}

namespace {

Graph combine(const Graph& g1, const Graph& g2, bool cross) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  check_order(n);
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (Vertex v = 0; v < n1; ++v) {
    for (Vertex u : g1.neighbors(v)) rows[v].insert(u);
    if (cross) rows[v] |= VertexSet::range(n, n1, n);
  }
  for (Vertex v = 0; v < g2.order(); ++v) {
    for (Vertex u : g2.neighbors(v)) rows[n1 + v].insert(n1 + u);
    if (cross) rows[n1 + v] |= VertexSet::range(n, 0, n1);
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  return combine(g1, g2, false);
}

Graph join(const Graph& g1, const Graph& g2) { return combine(g1, g2, true); }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw MalformedInput("vertex set universe does not match graph order");
  }
  const std::vector<Vertex> order = s.to_vector();
  return induced_subgraph(g, std::span<const Vertex>(order));
}

InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const Vertex> order) {
  const int k = static_cast<int>(order.size());
  VertexSet seen(g.order());
  for (Vertex v : order) {
    if (v < 0 || v >= g.order()) {
      throw MalformedInput("vertex " + std::to_string(v) +
                           " out of range in induced subgraph");
    }
    if (seen.contains(v)) {
      throw MalformedInput("duplicate vertex " + std::to_string(v) +
                           " in induced subgraph");
    }
    seen.insert(v);
  }
  std::vector<VertexSet> rows(k, VertexSet(k));
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (g.adjacent(order[a], order[b])) {
        rows[a].insert(b);
        rows[b].insert(a);
      }
    }
  }
  return {Graph::from_rows(std::move(rows)),
          std::vector<Vertex>(order.begin(), order.end())};
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw MalformedInput("relabeling has the wrong length");
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  VertexSet image(n);
  for (Vertex v : perm) image.insert(v);
  if (image.size() != n) throw MalformedInput("relabeling is not a bijection");
  return Graph::from_edges(n, edges, g.name());
}

namespace {

void check_disjoint(const VertexSet& s, const VertexSet& t) {
  if (s.intersects(t)) {
    throw PreconditionError("bracket query on overlapping vertex sets");
  }
}

}  // namespace

bool bracket_complete(const Graph& g, const VertexSet& s, const VertexSet& t) {
  check_disjoint(s, t);
  for (Vertex v : s) {
    if (!t.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool bracket_empty(const Graph& g, const VertexSet& s, const VertexSet& t) {
  check_disjoint(s, t);
  for (Vertex v : s) {
    if (g.neighbors(v).intersects(t)) return false;
  }
  return true;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = g.empty_set();
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = g.vertices();
  for (Vertex v : s) out &= g.neighbors(v);
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet remaining = s;
  while (!remaining.empty()) {
    VertexSet comp = g.empty_set();
    VertexSet frontier = g.empty_set();
    frontier.insert(remaining.first());
    while (!frontier.empty()) {
      comp |= frontier;
      frontier = (neighborhood(g, frontier) & s) - comp;
    }
    out.push_back(comp);
    remaining -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components(g, g.vertices());
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges, "P" + std::to_string(n));
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges, "C" + std::to_string(n));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges, "K" + std::to_string(n));
}

Graph empty_graph(int n) {
  return Graph::from_edges(n, std::span<const Edge>{}, "E" + std::to_string(n));
}

}  // namespace gemcolor
