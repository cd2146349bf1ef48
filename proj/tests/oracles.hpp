#pragma once

// Test-only reference implementations, kept independent of the library code
// paths they are used to judge.

#include <optional>
#include <string>
#include <vector>

#include "sec/graph.hpp"

namespace sec::oracle {

/// Distance-2 test via BFS in the line graph: e sees f iff f is within two
/// hops of e among edges sharing endpoints.
bool sees_by_line_graph(const Graph& g, EdgeId e, EdgeId f);

/// All strong-coloring conflicts found by the pairwise definition.
std::vector<std::pair<EdgeId, EdgeId>> conflicts_by_pairs(const Graph& g, const PartialColoring& c);

/// Claw detection by scanning every vertex triple against every center.
bool has_claw_by_triples(const Graph& g);

/// Cut vertices by deletion: v is an articulation iff g - v is disconnected.
std::vector<VertexId> cut_vertices_by_deletion(const Graph& g);

/// Exhaustive strong k-edge-colorability by walking the full assignment
/// space, pruning only assignments already in conflict.
bool colorable_by_enumeration(const Graph& g, int k);

/// Minimum k with colorable_by_enumeration true.
int chi_s_by_enumeration(const Graph& g, int kmax = 9);

/// Length of a shortest induced even cycle, searched by extending induced
/// paths up to the cap; 0 when none exists within the cap.
int min_induced_even_cycle_by_search(const Graph& g, int max_len);

/// Existence of an assignment drawing each target's color from its list with
/// mutually-seeing targets distinct, by exhaustive choice enumeration.
bool sdr_exists_by_enumeration(const std::vector<ColorSet>& lists,
                               const std::vector<std::vector<int>>& conflicts);

/// All connected graphs with max degree <= 3 on n labeled vertices, reduced
/// to isomorphism classes by a plain all-permutations canonical form.
/// Practical for n <= 6.
int count_connected_subcubic_by_force(int n);

/// Canonical form by trying every vertex permutation (n <= 8).
std::string canonical_by_permutations(const Graph& g);

}  // namespace sec::oracle
