#ifndef GEMCOLOR_GRAPH_HPP
#define GEMCOLOR_GRAPH_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gemcolor/vertex_set.hpp"

namespace gemcolor {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Each vertex owns a VertexSet row of neighbours; the rows are kept
/// symmetric and irreflexive by construction. Every operation below returns a
/// new Graph, so values can be shared freely between threads.
class Graph {
 public:
  static constexpr int kMaxOrder = VertexSet::kMaxVertices;

  Graph() = default;

  /// Builds a graph from an edge list. Duplicate pairs (in either
  /// orientation) collapse to one edge. Throws MalformedInput on an endpoint
  /// outside [0, n) or on a self-loop.
  static Graph from_edges(int n, std::span<const Edge> edges,
                          std::string name = {});
  static Graph from_edges(int n, std::initializer_list<Edge> edges,
                          std::string name = {});
  /// Builds a graph from adjacency rows; rows must be symmetric and
  /// irreflexive.
  static Graph from_rows(std::vector<VertexSet> rows, std::string name = {});

  int order() const { return static_cast<int>(rows_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  const std::string& name() const { return name_; }
  Graph with_name(std::string name) const;

  const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }
  int degree(Vertex v) const { return rows_.at(v).size(); }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }
  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Structural equality; the name is ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.rows_ == b.rows_;
  }

 private:
  Graph(std::vector<VertexSet> rows, std::string name);

  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
  std::string name_;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Disjoint union plus every edge between the two sides.
Graph join(const Graph& g1, const Graph& g2);

struct InducedSubgraph {
  Graph graph;
  /// origin[i] is the vertex of the host graph that became vertex i.
  std::vector<Vertex> origin;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
/// Induced subgraph on an explicitly ordered vertex list; vertex i of the
/// result is order[i]. Throws MalformedInput on duplicates or bad indices.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> order);

/// Relabels vertex v to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// True iff every vertex of s is adjacent to every vertex of t.
/// Throws PreconditionError if s and t overlap.
bool bracket_complete(const Graph& g, const VertexSet& s, const VertexSet& t);
/// True iff no edge joins s and t. Throws PreconditionError on overlap.
bool bracket_empty(const Graph& g, const VertexSet& s, const VertexSet& t);

/// N(S): vertices adjacent to at least one member of s (may intersect s).
VertexSet neighborhood(const Graph& g, const VertexSet& s);
/// Vertices adjacent to every member of s. Returns all vertices for empty s.
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

/// Connected components of <s>, ordered by least vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);
std::vector<VertexSet> components(const Graph& g);

/// Graph builders used throughout tests and generators.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);

}  // namespace gemcolor

#endif  // GEMCOLOR_GRAPH_HPP
