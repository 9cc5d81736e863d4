#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "euler/graph.hpp"

namespace euler {

/// Parse failure with the 1-based input line it occurred on (0 = end of input).
struct ParseError : std::runtime_error {
    int line;

    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// One `t <part> <vertex>` assignment line, in input order.
struct PartAssignment {
    int part = 0;
    int vertex = 0;
};

/// Text format:
///   c <comment>                          (anywhere; blank lines are skipped)
///   p euler <undirected|directed> n m    (exactly once, before edges)
///   e u v                                (undirected edge, m lines)
///   a u v                                (directed arc, m lines)
///   t part vertex                        (only when parts != nullptr)
/// Vertices are 1-based; self-loops and repeated edges are rejected.
Graph parse_graph(std::istream& in, std::vector<PartAssignment>* parts = nullptr);
Graph parse_graph(const std::string& text, std::vector<PartAssignment>* parts = nullptr);

/// Canonical text form: the p line, then one line per edge in id order.
/// Parsing the output reproduces the graph exactly.
std::string serialize_graph(const Graph& g);

} // namespace euler
