#include "sec/partial.hpp"

#include <algorithm>
#include <deque>

namespace sec {

LevelMap level_map(const Graph& g, const std::vector<VertexId>& S) {
    if (S.empty()) throw std::invalid_argument("level_map: seed set must not be empty");
    int n = g.vertex_count();
    LevelMap lm;
    lm.vdist.assign(static_cast<size_t>(n), -1);
    std::deque<VertexId> queue;
    for (VertexId s : S) {
        g.check_vertex(s);
        if (lm.vdist[static_cast<size_t>(s)] == 0) continue;
        lm.vdist[static_cast<size_t>(s)] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(v)) {
            if (lm.vdist[static_cast<size_t>(w)] >= 0) continue;
            lm.vdist[static_cast<size_t>(w)] = lm.vdist[static_cast<size_t>(v)] + 1;
            queue.push_back(w);
        }
    }
    for (int d : lm.vdist)
        if (d < 0) throw std::invalid_argument("level_map: graph must be connected");
    lm.edist2.reserve(static_cast<size_t>(g.edge_count()));
    for (const Edge& e : g.edges())
        lm.edist2.push_back(lm.vdist[static_cast<size_t>(e.u)] + lm.vdist[static_cast<size_t>(e.v)]);
    return lm;
}

EdgeOrder compatible_order(const Graph& g, const LevelMap& lm) {
    EdgeOrder order;
    order.sequence.resize(static_cast<size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) order.sequence[static_cast<size_t>(e)] = e;
    std::stable_sort(order.sequence.begin(), order.sequence.end(), [&](EdgeId a, EdgeId b) {
        int la = lm.edist2[static_cast<size_t>(a)], lb = lm.edist2[static_cast<size_t>(b)];
        if (la != lb) return la > lb;
        return a < b;
    });
    return order;
}

ColorSet availability(const Graph& g, const PartialColoring& c, EdgeId e) {
    if (c.has_color(e)) throw std::invalid_argument("availability: edge already colored");
    return seen_colors(g, c, e).complement(c.palette_size());
}

PartialColoring greedy_partial(const Graph& g, const std::vector<VertexId>& S) {
    LevelMap lm = level_map(g, S);
    EdgeOrder order = compatible_order(g, lm);
    PartialColoring c(g.edge_count(), 7);
    for (EdgeId e : order.sequence) {
        if (lm.edist2[static_cast<size_t>(e)] < 2) continue;
        ColorSet avail = availability(g, c, e);
        if (avail.empty()) throw GreedyStuck(e);
        c.set(e, avail.min());
    }
    return c;
}

namespace {

// Backtracking list coloring of the conflict subgraph on the targets.
// Deterministic: most-constrained target first (fewest remaining colors,
// earliest in the target list on ties), colors tried ascending.
bool sdr_search(const std::vector<ColorSet>& lists, const std::vector<std::vector<int>>& conflicts,
                std::vector<int>& chosen) {
    size_t k = lists.size();
    int pick = -1;
    int pick_count = kMaxColor + 1;
    for (size_t i = 0; i < k; ++i) {
        if (chosen[i] != 0) continue;
        ColorSet live = lists[i];
        for (int j : conflicts[i])
            if (chosen[static_cast<size_t>(j)] != 0) live.remove(chosen[static_cast<size_t>(j)]);
        int cnt = live.count();
        if (cnt == 0) return false;
        if (cnt < pick_count) {
            pick_count = cnt;
            pick = static_cast<int>(i);
        }
    }
    if (pick < 0) return true;
    ColorSet live = lists[static_cast<size_t>(pick)];
    for (int j : conflicts[static_cast<size_t>(pick)])
        if (chosen[static_cast<size_t>(j)] != 0) live.remove(chosen[static_cast<size_t>(j)]);
    for (int c = live.min(); c != 0; c = live.min()) {
        live.remove(c);
        chosen[static_cast<size_t>(pick)] = c;
        if (sdr_search(lists, conflicts, chosen)) return true;
        chosen[static_cast<size_t>(pick)] = 0;
    }
    return false;
}

}  // namespace

std::optional<PartialColoring> sdr_extend(const Graph& g, const PartialColoring& c,
                                          const std::vector<EdgeId>& targets) {
    size_t k = targets.size();
    std::vector<ColorSet> lists;
    lists.reserve(k);
    for (EdgeId e : targets) lists.push_back(availability(g, c, e));
    std::vector<std::vector<int>> conflicts(k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            if (sees(g, targets[i], targets[j])) {
                conflicts[i].push_back(static_cast<int>(j));
                conflicts[j].push_back(static_cast<int>(i));
            }
    std::vector<int> chosen(k, 0);
    if (!sdr_search(lists, conflicts, chosen)) return std::nullopt;
    PartialColoring out = c;
    for (size_t i = 0; i < k; ++i) out.set(targets[i], chosen[i]);
    return out;
}

}  // namespace sec
