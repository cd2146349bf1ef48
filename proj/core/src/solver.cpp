#include "sec/solver.hpp"

#include <algorithm>
#include <chrono>

#include "sec/corpus.hpp"
#include "sec/recognition.hpp"

namespace sec {

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
    const Graph* cg;  // conflict graph
    int n;
    int k;
    uint64_t node_budget;
    Clock::time_point deadline;
    uint64_t nodes = 0;
    bool out_of_budget = false;

    std::vector<int> color;                 // 0 = unassigned
    std::vector<std::array<int, kMaxColor + 1>> nbr_count;  // per vertex, per color
    std::vector<int> saturation;

    bool budget_ok() {
        if (out_of_budget) return false;
        if (++nodes > node_budget || (nodes % 4096 == 0 && Clock::now() > deadline)) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    void assign(int v, int c) {
        color[static_cast<size_t>(v)] = c;
        for (VertexId w : cg->neighbors(v)) {
            if (nbr_count[static_cast<size_t>(w)][static_cast<size_t>(c)]++ == 0)
                ++saturation[static_cast<size_t>(w)];
        }
    }
    void unassign(int v, int c) {
        color[static_cast<size_t>(v)] = 0;
        for (VertexId w : cg->neighbors(v)) {
            if (--nbr_count[static_cast<size_t>(w)][static_cast<size_t>(c)] == 0)
                --saturation[static_cast<size_t>(w)];
        }
    }

    // DSATUR pick: most saturated, then highest degree, then smallest id.
    int pick() const {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<size_t>(v)] != 0) continue;
            if (best < 0) {
                best = v;
                continue;
            }
            int sv = saturation[static_cast<size_t>(v)], sb = saturation[static_cast<size_t>(best)];
            if (sv > sb || (sv == sb && cg->degree(v) > cg->degree(best))) best = v;
        }
        return best;
    }

    // Colors above (current max used + 1) are interchangeable; never branch
    // on more than one fresh color.
    bool dfs(int assigned, int max_used) {
        if (assigned == n) return true;
        if (!budget_ok()) return false;
        int v = pick();
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (nbr_count[static_cast<size_t>(v)][static_cast<size_t>(c)] > 0) continue;
            assign(v, c);
            if (dfs(assigned + 1, std::max(max_used, c))) return true;
            unassign(v, c);
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

std::vector<EdgeId> conflict_clique(const Graph& g) {
    Graph cg = conflict_graph(g);
    int n = cg.vertex_count();
    if (n == 0) return {};
    int seed = 0;
    for (int v = 1; v < n; ++v)
        if (cg.degree(v) > cg.degree(seed)) seed = v;
    std::vector<EdgeId> clique{seed};
    while (true) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            bool in = false;
            for (EdgeId c : clique) in |= (c == v);
            if (in) continue;
            bool all = true;
            for (EdgeId c : clique) all &= cg.has_edge(v, c);
            if (!all) continue;
            if (best < 0 || cg.degree(v) > cg.degree(best)) best = v;
        }
        if (best < 0) break;
        clique.push_back(best);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

SolveOutcome strong_color_k(const Graph& g, int k, const SolverConfig& cfg) {
    if (g.edge_count() > cfg.max_edges)
        throw std::invalid_argument("strong_color_k: edge count exceeds the configured limit");
    if (k < 1 || k > kMaxColor) throw std::invalid_argument("strong_color_k: k out of range");

    if (g.edge_count() == 0) {
        PartialColoring empty(0, k);
        return {SolveStatus::Colorable, empty, 0};
    }

    Graph cg = conflict_graph(g);
    Search s;
    s.cg = &cg;
    s.n = cg.vertex_count();
    s.k = k;
    s.node_budget = cfg.node_budget;
    s.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(cfg.time_budget_seconds));
    s.color.assign(static_cast<size_t>(s.n), 0);
    s.nbr_count.assign(static_cast<size_t>(s.n), {});
    s.saturation.assign(static_cast<size_t>(s.n), 0);

    int preassigned = 0;
    int max_used = 0;
    if (cfg.symmetry_breaking) {
        auto clique = conflict_clique(g);
        if (static_cast<int>(clique.size()) > k) return {SolveStatus::Uncolorable, std::nullopt, 0};
        // Any coloring can be renamed so this clique uses 1..|clique|.
        int c = 1;
        for (EdgeId v : clique) s.assign(v, c++);
        preassigned = static_cast<int>(clique.size());
        max_used = preassigned;
    }

    bool found = s.dfs(preassigned, max_used);
    if (found) {
        PartialColoring out(g.edge_count(), std::max(k, 1));
        for (EdgeId e = 0; e < g.edge_count(); ++e) out.set(e, s.color[static_cast<size_t>(e)]);
        return {SolveStatus::Colorable, out, s.nodes};
    }
    if (s.out_of_budget) return {SolveStatus::Indeterminate, std::nullopt, s.nodes};
    return {SolveStatus::Uncolorable, std::nullopt, s.nodes};
}

ChiSResult exact_chi_s(const Graph& g, const SolverConfig& cfg) {
    if (g.edge_count() > cfg.max_edges)
        throw std::invalid_argument("exact_chi_s: edge count exceeds the configured limit");
    ChiSResult res;
    res.lower_bound = static_cast<int>(conflict_clique(g).size());
    if (g.edge_count() == 0) {
        res.value = 0;
        return res;
    }
    for (int k = std::max(1, res.lower_bound); k <= kMaxColor; ++k) {
        SolveOutcome out = strong_color_k(g, k, cfg);
        if (out.status == SolveStatus::Colorable) {
            res.value = k;
            res.certificate = out.coloring;
            return res;
        }
        if (out.status == SolveStatus::Indeterminate) return res;
    }
    return res;  // no strong coloring within kMaxColor: indeterminate by palette cap
}

std::vector<Graph> survey_extremal(int n, int target_chi, const SolverConfig& cfg) {
    if (n < 1 || n > 10) throw std::invalid_argument("survey_extremal: n must be in [1,10]");
    std::vector<Graph> hits;
    for (const Graph& g : enumerate_connected_subcubic(n)) {
        if (!is_claw_free(g)) continue;
        ChiSResult r = exact_chi_s(g, cfg);
        if (r.value && *r.value == target_chi) hits.push_back(g);
    }
    return hits;
}

}  // namespace sec
