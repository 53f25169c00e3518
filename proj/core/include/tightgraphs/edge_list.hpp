#pragma once

#include <iosfwd>
#include <string>

#include "tightgraphs/graph.hpp"

namespace tightgraphs {

// Plain text edge list:
//   p <n> <m>
//   <u> <v>        (one line per edge, 0-based)
// '#' starts a comment that runs to end of line. Writers emit edges with
// u < v in lexicographic order.

void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

// Throws std::invalid_argument with a line-numbered message on bad input.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace tightgraphs
