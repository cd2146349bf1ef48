#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sec/graph.hpp"

namespace sec {

enum class CaseKind {
    NotClawFree,
    NotSubcubic,
    Prism3,
    K4,
    K4Delta,
    HasDegree1,
    HasDegree2,
    CubicCutVertex,
    ChordedC4,
    InducedC4,
    TriangleCovered,
};

const char* case_name(CaseKind k);

/// Classification of a connected graph into the case analysis the coloring
/// engine dispatches on, with the witness that substantiates it.
struct CaseTag {
    CaseKind kind;
    std::vector<VertexId> vertices;  // claw center+leaves, low-degree vertex, cut vertex, 4-cycle
    std::vector<EdgeId> edges;       // chord, when present
    std::string str() const;
};

struct ClawWitness {
    VertexId center;
    std::array<VertexId, 3> leaves;  // pairwise non-adjacent neighbors
};

/// False with a witness iff an induced K_{1,3} exists.
bool is_claw_free(const Graph& g, std::optional<ClawWitness>* witness = nullptr);

/// Exact articulation set of a connected graph (DFS lowpoint).
std::vector<VertexId> cut_vertices(const Graph& g);

struct FourCycle {
    std::array<VertexId, 4> cycle;     // in cyclic order
    std::optional<EdgeId> chord;       // a diagonal, when one exists
};

/// Some 4-cycle, preferring one with a chord over a chordless one; nullopt
/// iff the graph has no 4-cycle.  Deterministic first witness in scan order.
std::optional<FourCycle> find_c4(const Graph& g);

/// Partition of the vertices into vertex-disjoint triangles.  Preconditions
/// (connected, cubic, claw-free, no 4-cycle) are re-verified; nullopt when
/// they fail.
std::optional<std::vector<std::array<VertexId, 3>>> triangle_partition(const Graph& g);

/// Multigraph on the triangles of a triangle-covered graph.  With no 4-cycle
/// there is at most one edge between two triangles, so it is in fact simple
/// and cubic; both are checked.
struct ContractedGraph {
    std::vector<std::array<VertexId, 3>> triangles;
    Graph quotient;                    // vertex i = triangles[i]
    std::vector<EdgeId> source_edge;   // per quotient edge, the originating edge of g
    std::vector<int> triangle_of;      // per vertex of g
};

ContractedGraph contract_triangles(const Graph& g, const std::vector<std::array<VertexId, 3>>& triangles);

/// A minimum induced even cycle of a triangle-covered graph, as the vertex
/// sequence v_1..v_2p.  Consecutive pairs (v_1,v_2), (v_3,v_4), ... lie in a
/// common triangle.  Found by lifting a shortest cycle of the contraction.
std::vector<VertexId> min_induced_even_cycle(const Graph& g);

/// Shortest cycle of a simple graph as a vertex sequence; empty if acyclic.
/// BFS from every vertex, truncated at half the best length found so far.
std::vector<VertexId> shortest_cycle(const Graph& g);

/// Exact isomorphism decision for graphs with at most 16 vertices.
bool iso_small(const Graph& g, const Graph& h);

/// Canonical form (graph6-ordered adjacency bits under the minimizing vertex
/// ordering) for graphs with at most 12 vertices; equal strings iff
/// isomorphic.  Used by the corpus enumerator for deduplication.
std::string canonical_form(const Graph& g);
Graph from_canonical_form(const std::string& form);

/// First matching tag in priority order; total on connected graphs.
CaseTag classify(const Graph& g);

}  // namespace sec
