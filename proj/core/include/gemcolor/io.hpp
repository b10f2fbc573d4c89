#ifndef GEMCOLOR_IO_HPP
#define GEMCOLOR_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gemcolor/graph.hpp"

namespace gemcolor::io {

enum class Format { kDimacs, kEdgeList, kJson };

/// "dimacs" | "edgelist" | "json" (case-insensitive).
Format parse_format(std::string_view name);
std::string_view format_name(Format format);
/// .col / .dimacs -> DIMACS, .json -> JSON, anything else -> edge list.
Format format_from_extension(const std::filesystem::path& path);

// DIMACS .col: "p edge <n> <m>", then "e <u> <v>" with 1-based endpoints.
// Lines starting with 'c' are comments. A header edge count that disagrees
// with the number of "e" lines is rejected.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

// Plain edge list: "n m" then m lines "u v" with 0-based endpoints.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// {"n": int, "edges": [[u,v],...], "name": str}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Write-only.
void write_dot(std::ostream& out, const Graph& g);

Graph read_graph(std::istream& in, Format format);
void write_graph(std::ostream& out, const Graph& g, Format format);
/// Throws MalformedInput if the file cannot be opened or parsed.
Graph read_graph_file(const std::filesystem::path& path, Format format);

/// FNV-1a over the canonical edge list; stable across runs and platforms.
std::string graph_hash(const Graph& g);

}  // namespace gemcolor::io

#endif  // GEMCOLOR_IO_HPP
