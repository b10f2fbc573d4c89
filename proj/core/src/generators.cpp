#include "gemcolor/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>

#include "gemcolor/errors.hpp"
#include "gemcolor/io.hpp"
#include "gemcolor/patterns.hpp"

namespace gemcolor {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// Parses the integer suffix of names such as "c7" or "kc5-3".
std::optional<int> suffix_number(std::string_view key, std::string_view prefix) {
  if (key.size() <= prefix.size() || key.substr(0, prefix.size()) != prefix) {
    return std::nullopt;
  }
  const std::string_view digits = key.substr(prefix.size());
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  return value;
}

Graph named(const std::string& key) {
  if (key == "groetzsch" || key == "grotzsch" || key == "grötzsch") {
    return mycielskian(cycle_graph(5)).with_name("groetzsch");
  }
  if (key == "schlafli-complement") return schlafli_complement();
  if (key == "paw") {
    return Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}, "paw");
  }
  if (auto m = suffix_number(key, "kc5-")) {
    if (*m < 1) throw UnknownName("bag size must be positive in '" + key + "'");
    Expansion e = complete_expansion({cycle_graph(5), std::vector<int>(5, *m)});
    return e.graph.with_name(key);
  }
  if (auto n = suffix_number(key, "p")) {
    if (*n >= 1) return path_graph(*n);
  }
  if (auto n = suffix_number(key, "c")) {
    if (*n >= 3) return cycle_graph(*n);
  }
  if (auto n = suffix_number(key, "k")) {
    if (*n >= 1) return complete_graph(*n);
  }
  if (auto n = suffix_number(key, "e")) {
    if (*n >= 0) return empty_graph(*n);
  }
  try {
    return named_pattern(key).graph.with_name(key);
  } catch (const UnknownName&) {
    throw UnknownName("unknown graph name '" + key + "'");
  }
}

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream)
      : engine_(seed * 0x9E3779B97F4A7C15ULL + stream * 0xBF58476D1CE4E5B9ULL +
                0x94D049BB133111EBULL) {}

  // Plain modulo reduction: the raw mt19937_64 sequence is fixed by the
  // standard, std::uniform_int_distribution is not.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Random composition of `total` into `parts` positive summands.
std::vector<int> random_composition(Rng& rng, int total, int parts) {
  std::vector<int> sizes(parts, 1);
  for (int extra = total - parts; extra > 0; --extra) {
    ++sizes[rng.below(parts)];
  }
  return sizes;
}

Graph random_gnp(Rng& rng, int n, double p) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.unit() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_subgraph(Rng& rng, const Graph& source, int n) {
  std::vector<Vertex> pool(source.order());
  for (Vertex v = 0; v < source.order(); ++v) pool[v] = v;
  for (int i = 0; i < n; ++i) {
    const auto pick = i + static_cast<int>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[pick]);
  }
  pool.resize(n);
  std::sort(pool.begin(), pool.end());
  return induced_subgraph(source, std::span<const Vertex>(pool)).graph;
}

constexpr int kRejectMaxOrder = 16;
constexpr int kRejectAttemptsPerDensity = 200;
constexpr double kRejectDensities[] = {0.2, 0.35, 0.5, 0.65, 0.8};
constexpr int kStructuredAttempts = 200;

Graph sample_reject(Rng& rng, int n) {
  if (n > kRejectMaxOrder) {
    throw PreconditionError("rejection sampling is limited to n <= 16");
  }
  for (double p : kRejectDensities) {
    for (int attempt = 0; attempt < kRejectAttemptsPerDensity; ++attempt) {
      Graph g = random_gnp(rng, n, p);
      if (is_class_member(g).member) return g;
    }
  }
  throw SamplingFailure("no class member found by rejection for n = " +
                        std::to_string(n));
}

Graph sample_expand(Rng& rng, int n) {
  for (int attempt = 0; attempt < kStructuredAttempts; ++attempt) {
    Graph base;
    switch (rng.below(3)) {
      case 0:
        if (n < 5) continue;
        base = cycle_graph(5);
        break;
      case 1:
        if (n < 4) continue;
        base = cycle_graph(4);
        break;
      default: {
        // Disjoint union of 1..3 cliques.
        const int parts = 1 + static_cast<int>(rng.below(std::min(3, n)));
        base = empty_graph(0);
        for (int size : random_composition(rng, std::min(n, parts + 2), parts)) {
          base = disjoint_union(base, complete_graph(size));
        }
        break;
      }
    }
    if (base.order() > n) continue;
    const std::vector<int> sizes = random_composition(rng, n, base.order());
    Graph g = complete_expansion({base, sizes}).graph;
    if (is_class_member(g).member) return g;
  }
  throw SamplingFailure("expansion sampling exhausted its attempts for n = " +
                        std::to_string(n));
}

Graph sample_prune(Rng& rng, int n) {
  // Sources are fixed class members; induced subgraphs stay in the class.
  static const std::vector<Graph> sources = [] {
    std::vector<Graph> out;
    out.push_back(schlafli_complement());
    out.push_back(mycielskian(cycle_graph(5)));
    out.push_back(complete_expansion({cycle_graph(5), {3, 3, 3, 3, 3}}).graph);
    out.push_back(complete_expansion({cycle_graph(5), {1, 2, 4, 2, 3}}).graph);
    return out;
  }();
  std::vector<const Graph*> eligible;
  for (const Graph& s : sources) {
    if (s.order() >= n) eligible.push_back(&s);
  }
  if (eligible.empty()) {
    throw PreconditionError("prune strategy supports n <= 27");
  }
  for (int attempt = 0; attempt < kStructuredAttempts; ++attempt) {
    const Graph& source = *eligible[rng.below(eligible.size())];
    Graph g = random_subgraph(rng, source, n);
    if (is_class_member(g).member) return g;
  }
  throw SamplingFailure("prune sampling exhausted its attempts");
}

}  // namespace

Graph named_graph(std::string_view name) { return named(lower(name)); }

std::vector<std::string> named_graph_examples() {
  return {"p4",      "c5",     "k4",    "e3",   "2k2",   "p3up2",
          "gem",     "diamond", "paw",  "hvn",  "k1+c4", "co-p3up2",
          "k5-e",    "groetzsch", "schlafli-complement", "kc5-2"};
}

Graph mycielskian(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(n + u, v);
    edges.emplace_back(n + v, u);
  }
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(2 * n, n + i);
  return Graph::from_edges(2 * n + 1, edges,
                           g.name().empty() ? "" : "mu(" + g.name() + ")");
}

Expansion complete_expansion(const ExpansionSpec& spec) {
  const int base_n = spec.base.order();
  if (static_cast<int>(spec.sizes.size()) != base_n) {
    throw PreconditionError("expansion needs one bag size per base vertex");
  }
  int total = 0;
  std::vector<int> start(base_n);
  for (int i = 0; i < base_n; ++i) {
    if (spec.sizes[i] < 1) throw PreconditionError("bag sizes must be >= 1");
    start[i] = total;
    total += spec.sizes[i];
  }
  if (total > Graph::kMaxOrder) {
    throw PreconditionError("expansion exceeds the supported graph order");
  }
  Expansion out;
  for (int i = 0; i < base_n; ++i) {
    out.bags.push_back(VertexSet::range(total, start[i], start[i] + spec.sizes[i]));
  }
  std::vector<VertexSet> rows(total, VertexSet(total));
  for (int i = 0; i < base_n; ++i) {
    VertexSet reach = out.bags[i];
    for (Vertex j : spec.base.neighbors(i)) reach |= out.bags[j];
    for (Vertex v : out.bags[i]) {
      rows[v] = reach;
      rows[v].erase(v);
    }
  }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

std::optional<SrgParameters> srg_parameters(const Graph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  const int k = g.degree(0);
  int lambda = -1, mu = -1;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) != k) return std::nullopt;
    for (Vertex v = u + 1; v < n; ++v) {
      const int common = (g.neighbors(u) & g.neighbors(v)).size();
      int& slot = g.adjacent(u, v) ? lambda : mu;
      if (slot == -1) slot = common;
      if (slot != common) return std::nullopt;
    }
  }
  if (lambda == -1 || mu == -1) return std::nullopt;
  return SrgParameters{n, k, lambda, mu};
}

Graph schlafli_complement() {
  constexpr int kLines = 27;
  auto a = [](int i) { return i - 1; };
  auto b = [](int i) { return 6 + i - 1; };
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) pairs.emplace_back(i, j);
  }
  auto c = [&](int idx) { return 12 + idx; };

  std::vector<Edge> edges;
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 6; ++j) {
      if (i != j) edges.emplace_back(a(i), b(j));
    }
  }
  for (int idx = 0; idx < static_cast<int>(pairs.size()); ++idx) {
    const auto [j, k] = pairs[idx];
    for (int i : {j, k}) {
      edges.emplace_back(a(i), c(idx));
      edges.emplace_back(b(i), c(idx));
    }
    for (int other = idx + 1; other < static_cast<int>(pairs.size()); ++other) {
      const auto [p, q] = pairs[other];
      if (p != j && p != k && q != j && q != k) edges.emplace_back(c(idx), c(other));
    }
  }
  Graph g = Graph::from_edges(kLines, edges, "schlafli-complement");
  const auto params = srg_parameters(g);
  if (!params || *params != SrgParameters{27, 10, 1, 5}) {
    throw ConstructionError("27-lines graph failed the SRG(27,10,1,5) check");
  }
  return g;
}

SampleStrategy parse_strategy(std::string_view name) {
  const std::string key = lower(name);
  if (key == "reject") return SampleStrategy::kReject;
  if (key == "expand") return SampleStrategy::kExpand;
  if (key == "prune") return SampleStrategy::kPrune;
  throw UnknownName("unknown sampling strategy '" + std::string(name) + "'");
}

std::string_view strategy_name(SampleStrategy s) {
  switch (s) {
    case SampleStrategy::kReject:
      return "reject";
    case SampleStrategy::kExpand:
      return "expand";
    case SampleStrategy::kPrune:
      return "prune";
  }
  return "?";
}

Graph random_class_member(int n, std::uint64_t seed, SampleStrategy strategy) {
  if (n < 1) throw PreconditionError("sample order must be positive");
  Rng rng(seed, static_cast<std::uint64_t>(n) * 3 + static_cast<int>(strategy));
  Graph g;
  switch (strategy) {
    case SampleStrategy::kReject:
      g = sample_reject(rng, n);
      break;
    case SampleStrategy::kExpand:
      g = sample_expand(rng, n);
      break;
    case SampleStrategy::kPrune:
      g = sample_prune(rng, n);
      break;
  }
  return g.with_name(std::string(strategy_name(strategy)) + "-n" +
                     std::to_string(n) + "-s" + std::to_string(seed));
}

nlohmann::json expansion_sidecar(const ExpansionSpec& spec,
                                 const Expansion& expansion) {
  nlohmann::json bags = nlohmann::json::array();
  for (const VertexSet& bag : expansion.bags) bags.push_back(bag.to_vector());
  return {{"construction", "complete_expansion"},
          {"base", io::to_json(spec.base)},
          {"sizes", spec.sizes},
          {"bags", std::move(bags)}};
}

}  // namespace gemcolor
