#include "gemcolor/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gemcolor/errors.hpp"

namespace gemcolor::io {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// Reads one integer token, rejecting trailing garbage such as "3x".
long long parse_int(const std::string& token, int line_no) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) {
    throw MalformedInput("line " + std::to_string(line_no) +
                         ": expected an integer, got '" + token + "'");
  }
  return value;
}

int checked_order(long long n, int line_no) {
  if (n < 0 || n > Graph::kMaxOrder) {
    throw MalformedInput("line " + std::to_string(line_no) + ": vertex count " +
                         std::to_string(n) + " unsupported (max " +
                         std::to_string(Graph::kMaxOrder) + ")");
  }
  return static_cast<int>(n);
}

}  // namespace

Format parse_format(std::string_view name) {
  const std::string key = lower(name);
  if (key == "dimacs" || key == "col") return Format::kDimacs;
  if (key == "edgelist" || key == "edge-list") return Format::kEdgeList;
  if (key == "json") return Format::kJson;
  throw UnknownName("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(Format format) {
  switch (format) {
    case Format::kDimacs:
      return "dimacs";
    case Format::kEdgeList:
      return "edgelist";
    case Format::kJson:
      return "json";
  }
  return "edgelist";
}

Format format_from_extension(const std::filesystem::path& path) {
  const std::string ext = lower(path.extension().string());
  if (ext == ".col" || ext == ".dimacs") return Format::kDimacs;
  if (ext == ".json") return Format::kJson;
  return Format::kEdgeList;
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  long long declared_edges = 0;
  std::string name;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "c") {
      // A "c name <label>" comment carries the graph label through a round
      // trip; every other comment is ignored.
      std::string key;
      if (fields >> key && key == "name") {
        std::getline(fields >> std::ws, name);
      }
      continue;
    }
    if (tag == "p") {
      std::string kind, n_tok, m_tok;
      if (!(fields >> kind >> n_tok >> m_tok) || (kind != "edge" && kind != "col")) {
        throw MalformedInput("line " + std::to_string(line_no) +
                             ": malformed problem line");
      }
      if (n >= 0) {
        throw MalformedInput("line " + std::to_string(line_no) +
                             ": duplicate problem line");
      }
      n = checked_order(parse_int(n_tok, line_no), line_no);
      declared_edges = parse_int(m_tok, line_no);
      continue;
    }
    if (tag == "e") {
      if (n < 0) {
        throw MalformedInput("line " + std::to_string(line_no) +
                             ": edge before problem line");
      }
      std::string u_tok, v_tok;
      if (!(fields >> u_tok >> v_tok)) {
        throw MalformedInput("line " + std::to_string(line_no) +
                             ": malformed edge line");
      }
      const long long u = parse_int(u_tok, line_no);
      const long long v = parse_int(v_tok, line_no);
      if (u < 1 || u > n || v < 1 || v > n) {
        throw MalformedInput("line " + std::to_string(line_no) +
                             ": endpoint outside [1, n]");
      }
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      continue;
    }
    throw MalformedInput("line " + std::to_string(line_no) +
                         ": unknown line type '" + tag + "'");
  }
  if (n < 0) throw MalformedInput("missing 'p edge' problem line");
  if (declared_edges != static_cast<long long>(edges.size())) {
    throw MalformedInput("problem line declares " +
                         std::to_string(declared_edges) + " edges but " +
                         std::to_string(edges.size()) + " were listed");
  }
  return Graph::from_edges(n, edges, name);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  if (!g.name().empty()) out << "c name " << g.name() << '\n';
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
}

Graph read_edge_list(std::istream& in) {
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.size() < 2) throw MalformedInput("edge list: missing 'n m' header");
  const int n = checked_order(parse_int(tokens[0], 1), 1);
  const long long m = parse_int(tokens[1], 1);
  if (m < 0 || static_cast<long long>(tokens.size()) != 2 + 2 * m) {
    throw MalformedInput("edge list: header declares " + std::to_string(m) +
                         " edges but " + std::to_string((tokens.size() - 2) / 2) +
                         " endpoint pairs follow");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const int line_no = static_cast<int>(i) + 2;
    const long long u = parse_int(tokens[2 + 2 * i], line_no);
    const long long v = parse_int(tokens[3 + 2 * i], line_no);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw MalformedInput("edge list line " + std::to_string(line_no) +
                           ": endpoint outside [0, n)");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}, {"name", g.name()}};
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw MalformedInput("graph JSON must be an object");
    const long long n_raw = j.at("n").get<long long>();
    const int n = checked_order(n_raw, 1);
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw MalformedInput("graph JSON: each edge must be a pair");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::string name = j.contains("name") ? j["name"].get<std::string>() : "";
    return Graph::from_edges(n, edges, std::move(name));
  } catch (const nlohmann::json::exception& ex) {
    throw MalformedInput(std::string("graph JSON: ") + ex.what());
  }
}

void write_dot(std::ostream& out, const Graph& g) {
  out << "graph \"" << (g.name().empty() ? "G" : g.name()) << "\" {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

Graph read_graph(std::istream& in, Format format) {
  switch (format) {
    case Format::kDimacs:
      return read_dimacs(in);
    case Format::kEdgeList:
      return read_edge_list(in);
    case Format::kJson: {
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& ex) {
        throw MalformedInput(std::string("graph JSON: ") + ex.what());
      }
      return graph_from_json(j);
    }
  }
  throw MalformedInput("unsupported format");
}

void write_graph(std::ostream& out, const Graph& g, Format format) {
  switch (format) {
    case Format::kDimacs:
      write_dimacs(out, g);
      return;
    case Format::kEdgeList:
      write_edge_list(out, g);
      return;
    case Format::kJson:
      out << to_json(g).dump() << '\n';
      return;
  }
}

Graph read_graph_file(const std::filesystem::path& path, Format format) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path.string() + "'");
  Graph g = read_graph(in, format);
  if (g.name().empty()) g = g.with_name(path.stem().string());
  return g;
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.order()));
  for (const auto& [u, v] : g.edges()) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace gemcolor::io
