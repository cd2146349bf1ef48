#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sec/graph.hpp"

namespace sec {

struct SolverConfig {
    int max_edges = 40;
    uint64_t node_budget = 50'000'000;
    double time_budget_seconds = 600.0;
    bool symmetry_breaking = true;
};

enum class SolveStatus { Colorable, Uncolorable, Indeterminate };

struct SolveOutcome {
    SolveStatus status;
    std::optional<PartialColoring> coloring;  // witness when Colorable
    uint64_t nodes = 0;
};

/// Decides whether g has a strong k-edge-coloring, by backtracking vertex
/// coloring of the conflict graph in saturation order.  Exact unless a
/// budget runs out, which yields Indeterminate, never a wrong answer.
SolveOutcome strong_color_k(const Graph& g, int k, const SolverConfig& cfg = {});

struct ChiSResult {
    std::optional<int> value;  // empty = indeterminate within the budgets
    std::optional<PartialColoring> certificate;
    int lower_bound = 0;       // clique in the conflict graph
};

/// Minimum k admitting a strong k-edge-coloring, by ascending search from
/// the conflict-graph clique bound.
ChiSResult exact_chi_s(const Graph& g, const SolverConfig& cfg = {});

/// All connected claw-free subcubic graphs on exactly n vertices whose
/// strong chromatic index equals target, up to isomorphism.
std::vector<Graph> survey_extremal(int n, int target_chi, const SolverConfig& cfg = {});

/// Greedy clique of the conflict graph (a sound lower bound certificate).
std::vector<EdgeId> conflict_clique(const Graph& g);

}  // namespace sec
