#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace sec::oracle {

bool sees_by_line_graph(const Graph& g, EdgeId e, EdgeId f) {
    if (e == f) return false;
    std::vector<int> dist(static_cast<size_t>(g.edge_count()), -1);
    dist[static_cast<size_t>(e)] = 0;
    std::deque<EdgeId> queue{e};
    while (!queue.empty()) {
        EdgeId x = queue.front();
        queue.pop_front();
        if (dist[static_cast<size_t>(x)] == 2) continue;
        for (EdgeId y = 0; y < g.edge_count(); ++y) {
            if (y == x || dist[static_cast<size_t>(y)] >= 0) continue;
            if (!g.adjacent_edges(x, y)) continue;
            dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
            queue.push_back(y);
        }
    }
    return dist[static_cast<size_t>(f)] >= 1 && dist[static_cast<size_t>(f)] <= 2;
}

std::vector<std::pair<EdgeId, EdgeId>> conflicts_by_pairs(const Graph& g, const PartialColoring& c) {
    std::vector<std::pair<EdgeId, EdgeId>> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
            if (!c.has_color(e) || !c.has_color(f) || c.color(e) != c.color(f)) continue;
            if (sees_by_line_graph(g, e, f)) out.emplace_back(e, f);
        }
    return out;
}

bool has_claw_by_triples(const Graph& g) {
    int n = g.vertex_count();
    for (VertexId c = 0; c < n; ++c)
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = a + 1; b < n; ++b)
                for (VertexId d = b + 1; d < n; ++d) {
                    if (a == c || b == c || d == c) continue;
                    if (!g.has_edge(c, a) || !g.has_edge(c, b) || !g.has_edge(c, d)) continue;
                    if (!g.has_edge(a, b) && !g.has_edge(a, d) && !g.has_edge(b, d)) return true;
                }
    return false;
}

std::vector<VertexId> cut_vertices_by_deletion(const Graph& g) {
    std::vector<VertexId> out;
    int n = g.vertex_count();
    for (VertexId v = 0; v < n; ++v) {
        std::vector<VertexId> rest;
        for (VertexId w = 0; w < n; ++w)
            if (w != v) rest.push_back(w);
        if (rest.empty()) continue;
        if (!g.induced(rest).connected()) out.push_back(v);
    }
    return out;
}

namespace {

bool color_edges_rec(const Graph& g, int k, std::vector<int>& colors, size_t at) {
    if (at == colors.size()) return true;
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (size_t prev = 0; prev < at && ok; ++prev) {
            if (colors[prev] != c) continue;
            if (sees_by_line_graph(g, static_cast<EdgeId>(at), static_cast<EdgeId>(prev))) ok = false;
        }
        if (!ok) continue;
        colors[at] = c;
        if (color_edges_rec(g, k, colors, at + 1)) return true;
        colors[at] = 0;
    }
    return false;
}

}  // namespace

bool colorable_by_enumeration(const Graph& g, int k) {
    std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);
    return color_edges_rec(g, k, colors, 0);
}

int chi_s_by_enumeration(const Graph& g, int kmax) {
    if (g.edge_count() == 0) return 0;
    for (int k = 1; k <= kmax; ++k)
        if (colorable_by_enumeration(g, k)) return k;
    return kmax + 1;
}

namespace {

// Grow induced paths; closing back to the start yields an induced cycle.
bool induced_cycle_of_length(const Graph& g, int len, std::vector<VertexId>& path,
                             std::vector<char>& used) {
    int have = static_cast<int>(path.size());
    if (have == len) {
        VertexId first = path.front(), last = path.back();
        return g.has_edge(first, last);
    }
    VertexId last = path.back();
    for (VertexId next : g.neighbors(last)) {
        if (used[static_cast<size_t>(next)]) continue;
        if (have >= 2 && next < path.front()) continue;  // canonical start is the minimum
        bool induced = true;
        for (int i = 0; i + 1 < have && induced; ++i)
            if (g.has_edge(path[static_cast<size_t>(i)], next)) induced = false;
        if (!induced) continue;
        path.push_back(next);
        used[static_cast<size_t>(next)] = 1;
        if (induced_cycle_of_length(g, len, path, used)) return true;
        used[static_cast<size_t>(next)] = 0;
        path.pop_back();
    }
    return false;
}

}  // namespace

int min_induced_even_cycle_by_search(const Graph& g, int max_len) {
    for (int len = 4; len <= max_len; len += 2) {
        for (VertexId start = 0; start < g.vertex_count(); ++start) {
            std::vector<VertexId> path{start};
            std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
            used[static_cast<size_t>(start)] = 1;
            if (induced_cycle_of_length(g, len, path, used)) return len;
        }
    }
    return 0;
}

namespace {

bool sdr_rec(const std::vector<ColorSet>& lists, const std::vector<std::vector<int>>& conflicts,
             std::vector<int>& chosen, size_t at) {
    if (at == lists.size()) return true;
    for (int c = 1; c <= kMaxColor; ++c) {
        if (!lists[at].contains(c)) continue;
        bool ok = true;
        for (int j : conflicts[at])
            if (static_cast<size_t>(j) < at && chosen[static_cast<size_t>(j)] == c) ok = false;
        if (!ok) continue;
        chosen[at] = c;
        if (sdr_rec(lists, conflicts, chosen, at + 1)) return true;
        chosen[at] = 0;
    }
    return false;
}

}  // namespace

bool sdr_exists_by_enumeration(const std::vector<ColorSet>& lists,
                               const std::vector<std::vector<int>>& conflicts) {
    std::vector<int> chosen(lists.size(), 0);
    return sdr_rec(lists, conflicts, chosen, 0);
}

std::string canonical_by_permutations(const Graph& g) {
    int n = g.vertex_count();
    if (n > 8) throw std::invalid_argument("canonical_by_permutations: n too large");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string bits;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                bits.push_back(g.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])
                                   ? '1'
                                   : '0');
        if (best.empty() || bits < best) best = bits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::ostringstream os;
    os << n << ":" << best;
    return os.str();
}

namespace {

void enumerate_labeled(int n, size_t pair_index, const std::vector<std::pair<int, int>>& pairs,
                       std::vector<std::pair<VertexId, VertexId>>& chosen, std::vector<int>& deg,
                       std::set<std::string>& classes) {
    if (pair_index == pairs.size()) {
        Graph g = Graph::from_edges(n, chosen);
        if (g.connected() && n > 0) classes.insert(canonical_by_permutations(g));
        return;
    }
    enumerate_labeled(n, pair_index + 1, pairs, chosen, deg, classes);
    auto [a, b] = pairs[pair_index];
    if (deg[static_cast<size_t>(a)] < 3 && deg[static_cast<size_t>(b)] < 3) {
        chosen.emplace_back(a, b);
        ++deg[static_cast<size_t>(a)];
        ++deg[static_cast<size_t>(b)];
        enumerate_labeled(n, pair_index + 1, pairs, chosen, deg, classes);
        --deg[static_cast<size_t>(a)];
        --deg[static_cast<size_t>(b)];
        chosen.pop_back();
    }
}

}  // namespace

int count_connected_subcubic_by_force(int n) {
    if (n > 6) throw std::invalid_argument("count_connected_subcubic_by_force: n too large");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::vector<std::pair<VertexId, VertexId>> chosen;
    std::vector<int> deg(static_cast<size_t>(n), 0);
    std::set<std::string> classes;
    enumerate_labeled(n, 0, pairs, chosen, deg, classes);
    return static_cast<int>(classes.size());
}

}  // namespace sec::oracle
