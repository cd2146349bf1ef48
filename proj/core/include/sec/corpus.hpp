#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sec/graph.hpp"

namespace sec {

struct CatalogEntry {
    std::string name;
    Graph graph;
    std::string provenance;
    std::optional<int> expected_chi_s;
};

/// Named graphs used throughout the tests and the CLI.
const std::vector<CatalogEntry>& catalog();
const Graph& catalog_graph(const std::string& name);

/// Two disjoint k-cycles joined by a perfect matching; cubic on 2k vertices.
Graph gen_k_prism(int k);

/// Replaces every vertex of a cubic graph with a triangle; the three ports
/// of a triangle serve the original incident edges in ascending neighbor
/// order.  The result is claw-free and cubic.
Graph triangle_expand(const Graph& h);

/// All connected simple graphs on exactly n vertices with maximum degree 3,
/// one canonical representative per isomorphism class, in a fixed order.
std::vector<Graph> enumerate_connected_subcubic(int n);

/// Seeded local growth of a connected claw-free subcubic graph on at most n
/// vertices.  Same seed, same graph.
Graph random_claw_free_subcubic(int n, uint64_t seed);

}  // namespace sec
