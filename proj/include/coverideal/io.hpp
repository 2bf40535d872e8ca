#pragma once

#include <string>
#include <vector>

#include "coverideal/graph.hpp"

namespace coverideal {

// Text formats for graphs.  "edges" is one edge per line as two whitespace
// separated vertex labels; a line with a single label declares an isolated
// vertex and '#' starts a comment.  Vertices are numbered in order of first
// appearance.  "dimacs" is the classic p/e format with 1-based indices and
// default labels.  "autodetect" picks dimacs exactly when a p-line is
// present.
enum class graph_format { autodetect, edges, dimacs };

struct parsed_input {
    graph g;
    std::string digest;  // fnv1a64 of the raw input bytes, 16 hex digits
};

// Throws std::invalid_argument with a line number on malformed input.
parsed_input parse_graph(const std::string& text, graph_format f = graph_format::autodetect);
// Reads the file (or stdin for "-") and parses it.
parsed_input read_graph_file(const std::string& path, graph_format f = graph_format::autodetect);

std::string fnv1a64_hex(const std::string& bytes);

// Labels of the members of s in increasing index order.
std::vector<std::string> label_list(const graph& g, vertex_set s);

// Product of the member labels: concatenated when every label of the graph
// is a single character (so "bceg"), otherwise '*' separated; the empty set
// prints as "1".
std::string monomial_string(const graph& g, vertex_set s);

} // namespace coverideal
