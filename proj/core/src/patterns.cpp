#include "gemcolor/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace gemcolor {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

Graph k1() { return empty_graph(1); }

Graph build_named(const std::string& key) {
  if (key == "p2") return path_graph(2);
  if (key == "p3") return path_graph(3);
  if (key == "p4") return path_graph(4);
  if (key == "k3") return complete_graph(3);
  if (key == "2k2") return disjoint_union(path_graph(2), path_graph(2));
  if (key == "p3up2") return disjoint_union(path_graph(3), path_graph(2));
  if (key == "c4") return cycle_graph(4);
  if (key == "c5") return cycle_graph(5);
  if (key == "gem") return join(k1(), path_graph(4));
  if (key == "diamond") return join(k1(), path_graph(3));
  if (key == "hvn") {
    // K4 on 0..3 plus vertex 4 adjacent to exactly two of its vertices.
    Graph k4 = complete_graph(4);
    std::vector<Edge> edges = k4.edges();
    edges.emplace_back(4, 0);
    edges.emplace_back(4, 1);
    return Graph::from_edges(5, edges);
  }
  if (key == "k1+c4") return join(k1(), cycle_graph(4));
  if (key == "co-p3up2") {
    return complement(disjoint_union(path_graph(3), path_graph(2)));
  }
  if (key == "k5-e") {
    std::vector<Edge> edges = complete_graph(5).edges();
    std::erase(edges, Edge{3, 4});
    return Graph::from_edges(5, edges);
  }
  if (key == "k5") return complete_graph(5);
  throw UnknownName("unknown pattern '" + key + "'");
}

// Backtracking matcher for induced embeddings of a pattern into a host.
class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern, const VertexSet& within)
      : host_(host),
        pattern_(pattern),
        within_(within),
        order_(pattern.order()),
        map_(pattern.order(), -1) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return pattern.degree(a) > pattern.degree(b);
    });
  }

  std::optional<std::vector<Vertex>> run() {
    if (pattern_.order() > within_.size()) return std::nullopt;
    VertexSet used(host_.order());
    if (search(0, used)) return map_;
    return std::nullopt;
  }

 private:
  bool search(int depth, VertexSet& used) {
    if (depth == pattern_.order()) return true;
    const Vertex pv = order_[depth];
    VertexSet candidates = within_ - used;
    for (int d = 0; d < depth; ++d) {
      const Vertex q = order_[d];
      if (pattern_.adjacent(pv, q)) {
        candidates &= host_.neighbors(map_[q]);
      } else {
        candidates -= host_.neighbors(map_[q]);
      }
    }
    const int need = pattern_.degree(pv);
    for (Vertex h : candidates) {
      if ((host_.neighbors(h) & within_).size() < need) continue;
      map_[pv] = h;
      used.insert(h);
      if (search(depth + 1, used)) return true;
      used.erase(h);
    }
    map_[pv] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  VertexSet within_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
};

}  // namespace

ClassViolation::ClassViolation(PatternWitness witness)
    : PreconditionError("graph contains an induced " + witness.pattern),
      witness_(std::move(witness)) {}

Pattern named_pattern(std::string_view name) {
  const std::string key = lower(name);
  return {key, build_named(key)};
}

std::vector<std::string> pattern_names() {
  return {"p2",  "p3",      "p4",  "k3",    "2k2",      "p3up2", "c4", "c5",
          "gem", "diamond", "hvn", "k1+c4", "co-p3up2", "k5-e",  "k5"};
}

Pattern custom_pattern(Graph graph, std::string name) {
  if (graph.order() > Pattern::kMaxOrder) {
    throw UnsupportedPattern("pattern '" + name + "' has " +
                             std::to_string(graph.order()) +
                             " vertices; at most 8 are supported");
  }
  return {std::move(name), std::move(graph)};
}

std::vector<Pattern> parse_pattern_list(std::string_view list) {
  std::vector<Pattern> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view item = list.substr(start, comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) {
      item.remove_prefix(1);
    }
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) {
      item.remove_suffix(1);
    }
    if (!item.empty()) out.push_back(named_pattern(item));
    start = comma + 1;
  }
  if (out.empty()) throw UnknownName("empty pattern list");
  return out;
}

std::vector<Pattern> default_family() {
  return {named_pattern("p3up2"), named_pattern("gem")};
}

std::optional<PatternWitness> find_induced(const Graph& g,
                                           const Pattern& pattern) {
  return find_induced(g, pattern, g.vertices());
}

std::optional<PatternWitness> find_induced(const Graph& g,
                                           const Pattern& pattern,
                                           const VertexSet& within) {
  if (pattern.graph.order() > Pattern::kMaxOrder) {
    throw UnsupportedPattern("pattern '" + pattern.name +
                             "' exceeds 8 vertices");
  }
  auto embedding = Matcher(g, pattern.graph, within).run();
  if (!embedding) return std::nullopt;
  return PatternWitness{pattern.name, std::move(*embedding)};
}

Membership is_class_member(const Graph& g, std::span<const Pattern> forbidden) {
  for (const Pattern& p : forbidden) {
    if (auto w = find_induced(g, p)) return {false, std::move(w)};
  }
  return {true, std::nullopt};
}

Membership is_class_member(const Graph& g) {
  static const std::vector<Pattern> family = default_family();
  return is_class_member(g, family);
}

bool is_p3_free(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet closed = g.neighbors(v);
    closed.insert(v);
    for (Vertex u : g.neighbors(v)) {
      VertexSet other = g.neighbors(u);
      other.insert(u);
      if (other != closed) return false;
    }
  }
  return true;
}

bool is_p4_free(const Graph& g) {
  static const Pattern p4 = named_pattern("p4");
  return !find_induced(g, p4).has_value();
}

bool witness_is_valid(const Graph& g, const Pattern& pattern,
                      const PatternWitness& w) {
  const int k = pattern.graph.order();
  if (static_cast<int>(w.embedding.size()) != k) return false;
  VertexSet seen(g.order());
  for (Vertex h : w.embedding) {
    if (h < 0 || h >= g.order() || seen.contains(h)) return false;
    seen.insert(h);
  }
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = a + 1; b < k; ++b) {
      if (pattern.graph.adjacent(a, b) !=
          g.adjacent(w.embedding[a], w.embedding[b])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, Vertex v,
                        std::vector<Vertex>& perm, VertexSet& used) {
  if (v == a.order()) return true;
  for (Vertex w = 0; w < b.order(); ++w) {
    if (used.contains(w) || a.degree(v) != b.degree(w)) continue;
    bool consistent = true;
    for (Vertex u = 0; u < v && consistent; ++u) {
      consistent = a.adjacent(u, v) == b.adjacent(perm[u], w);
    }
    if (!consistent) continue;
    perm[v] = w;
    used.insert(w);
    if (extend_isomorphism(a, b, v + 1, perm, used)) return true;
    used.erase(w);
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a,
                                                    const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  std::vector<int> da, db;
  for (Vertex v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  std::vector<Vertex> perm(a.order(), -1);
  VertexSet used(b.order());
  if (extend_isomorphism(a, b, 0, perm, used)) return perm;
  return std::nullopt;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace gemcolor
