#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "sepenum/graph.hpp"
#include "sepenum/weights.hpp"

namespace sepenum {

/// Reads the DIMACS-like edge format:
///   c <comment>
///   p edge <n> <m>
///   e <u> <v>        (1-indexed)
/// Exactly one problem line, before any edge line. Repeated edges are
/// accepted and collapse. Errors raise ParseError with the line number.
Graph load_graph(std::istream& in);
Graph load_graph_text(const std::string& text);
Graph load_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g, const std::string& comment = {});

/// Weights file: "<v> <weight>" per line, 1-indexed. Missing vertices keep
/// weight 1. Blank lines and lines starting with 'c' or '#' are skipped.
std::vector<Weight> load_weights(std::istream& in, int n);
std::vector<Weight> load_weights_file(const std::string& path, int n);

}  // namespace sepenum
