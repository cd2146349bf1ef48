#pragma once

#include <string>
#include <string_view>

#include "sec/graph.hpp"

namespace sec {

struct ParseError : std::runtime_error {
    ParseError(std::string msg, size_t where)
        : std::runtime_error(std::move(msg)), location(where) {}
    size_t location;  // 1-based line (edge list) or 0-based byte offset (graph6)
};

/// Edge list: one "u v" pair per line, 0-based ids.  Blank lines and lines
/// starting with '#' are ignored.  An optional "n <count>" header fixes the
/// vertex count; otherwise it is max id + 1 (0 for an empty file).
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// graph6: N(n) size prefix, then the upper triangle of the adjacency matrix
/// in column order, six bits per printable byte offset 63, zero padded.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// Coloring file for the verify command: lines are either "eid color" or
/// "u v color"; '#' comments and blank lines ignored.  Unlisted edges stay
/// unassigned.
PartialColoring parse_coloring(std::string_view text, const Graph& g, int palette = kMaxColor);
std::string write_coloring(const Graph& g, const PartialColoring& c);

}  // namespace sec
