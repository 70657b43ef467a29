#ifndef INCRTREE_GRAPH_IO_HPP
#define INCRTREE_GRAPH_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "incrtree/graph.hpp"

namespace incrtree {

// Text graph format:
//
//   # comment
//   n 4
//   1 2
//   2 3
//
// The first non-comment line is "n <count>"; every later non-comment line
// is an edge "u v" with 1 <= u < v <= n. '#' starts a comment anywhere on a
// line. Duplicate edges are rejected.

/// Throws ParseError on malformed input, SizeBoundExceeded when n > kMaxVertices.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

/// Inverse of parse_graph for graphs on 1..n; edges in lexicographic order.
std::string format_graph(const Graph& g);

}  // namespace incrtree

#endif
