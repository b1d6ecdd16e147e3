#pragma once

#include "dirlap/graph.hpp"

#include <iosfwd>
#include <string>

namespace dirlap {

// Line-oriented text format:
//   graph v2
//   v <id> <m> [rim]
//   e <src> <dst> <b>
// Ids are signed integers or double-quoted names; weights are decimals or
// fractions p/q. Edges may only reference ids with an earlier `v` line.
// The trailing `rim` marks a window-boundary vertex so truncated windows
// keep their rim on reload; plain vertex lines stay valid.
struct ParseError : GraphError {
  ParseError(std::string kind, int line, const std::string& detail);
  std::string kind;  // e.g. "self-loop", "duplicate edge", "nonpositive weight"
  int line;
};

Graph parse_graph(std::istream& in);
Graph load_graph(const std::string& path);

// Canonical form: vertices sorted by id, edges sorted by (src, dst), weights
// in exact rational spelling. Deterministic byte-for-byte.
void write_graph(const Graph& g, std::ostream& out);
std::string serialize_graph(const Graph& g);
void save_graph(const Graph& g, const std::string& path);

}  // namespace dirlap
