#pragma once

#include <iosfwd>
#include <string>

#include "contraction/graph.hpp"

namespace contraction {

// Edge-list text format, shared by every tool in this repo:
//   first non-comment line:  n m
//   then m lines:            u v        (0-based, whitespace separated)
// Lines starting with '#' (and inline '# ...' tails) are comments.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);

// Canonical serialization: "n m" then edges sorted lexicographically, u < v.
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace contraction
