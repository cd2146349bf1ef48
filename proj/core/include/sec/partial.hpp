#pragma once

#include <optional>
#include <vector>

#include "sec/graph.hpp"

namespace sec {

/// Distances to a seed vertex set S.  Edge levels are the mean of the two
/// endpoint levels and are kept doubled so everything stays integral.
struct LevelMap {
    std::vector<int> vdist;   // per vertex
    std::vector<int> edist2;  // per edge, 2 * d_S(e)
};

struct EdgeOrder {
    std::vector<EdgeId> sequence;  // a permutation of all edges
};

struct GreedyStuck : std::runtime_error {
    explicit GreedyStuck(EdgeId edge)
        : std::runtime_error("greedy coloring stuck at edge " + std::to_string(edge)), e(edge) {}
    EdgeId e;
};

/// Multi-source BFS levels.  S must be a non-empty subset of V and g
/// connected, so every vertex gets a finite level.
LevelMap level_map(const Graph& g, const std::vector<VertexId>& S);

/// Edges sorted by level descending, id ascending within ties.
EdgeOrder compatible_order(const Graph& g, const LevelMap& lm);

/// Colors of [1, palette] that e does not see under c.  e must be uncolored.
ColorSet availability(const Graph& g, const PartialColoring& c, EdgeId e);

/// Walks a compatible order and gives every edge of level >= 1 the smallest
/// color it does not see; edges of level < 1 stay unassigned.  On claw-free
/// subcubic graphs (other than the 3-prism) this never gets stuck.
PartialColoring greedy_partial(const Graph& g, const std::vector<VertexId>& S);

/// Extends c over the target edges, drawing each color from the target's
/// availability set with targets that see each other kept distinct.  Exact
/// backtracking; intended for the handful of edges the case analysis leaves.
/// nullopt when no such extension exists.
std::optional<PartialColoring> sdr_extend(const Graph& g, const PartialColoring& c,
                                          const std::vector<EdgeId>& targets);

}  // namespace sec
