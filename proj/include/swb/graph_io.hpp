#pragma once

#include <iosfwd>
#include <string>

#include "swb/graph.hpp"

namespace swb {

// Two interchangeable on-disk formats, sniffed by the first non-space
// character on read:
//
//   JSON       {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}
//   edge list  first line "n m", then one "u v" pair per line
//
// Vertices are 0-based in both.
enum class GraphFormat { json, edge_list };

Graph read_graph(std::istream& in);
Graph load_graph(const std::string& path);

void write_graph(std::ostream& out, const Graph& g, GraphFormat format);
void save_graph(const std::string& path, const Graph& g, GraphFormat format);

}  // namespace swb
