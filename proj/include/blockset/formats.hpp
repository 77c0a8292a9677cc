#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "blockset/graph.hpp"
#include "blockset/hypergraph.hpp"
#include "blockset/tree_decomposition.hpp"

// Text formats. Vertex ids are 1-based on disk and 0-based in memory.
namespace blockset::io {

class ParseError : public std::runtime_error {
   public:
    ParseError(int line, const std::string& msg);
    int line;
};

/// "p edge <n> <m>" then "e <u> <v>" lines; "c" lines are comments.
/// Duplicate edges are dropped and reported in `warnings`.
Graph parse_graph(const std::string& text, std::vector<std::string>* warnings = nullptr);
std::string print_graph(const Graph& g);

/// "p hs <n> <m>" then m lines of vertex ids.
Hypergraph parse_hypergraph(const std::string& text);
std::string print_hypergraph(const Hypergraph& h);

/// PACE .td: "s td <bags> <width+1> <n>", "b <i> <v...>", then "<i> <j>" tree edges.
TreeDecomposition parse_td(const std::string& text, int* n_out = nullptr);
std::string print_td(const TreeDecomposition& d, int n);

std::string read_file(const std::string& path);
/// Graph or hypergraph, chosen by the "p" header.
bool looks_like_hypergraph(const std::string& text);

}  // namespace blockset::io
