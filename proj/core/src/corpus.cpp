#include "sec/corpus.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <unordered_set>

#include "sec/recognition.hpp"

namespace sec {

namespace {

Graph cycle_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

Graph petersen_graph() {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph::from_edges(10, std::move(edges));
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        v.push_back({"3-prism", gen_k_prism(3), "two triangles joined by a perfect matching", 9});
        v.push_back({"K4", complete_graph(4), "complete graph on four vertices", 6});
        v.push_back({"K4-expanded", triangle_expand(complete_graph(4)),
                     "K4 with every vertex replaced by a triangle", std::nullopt});
        v.push_back({"H1",
                     Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
                     "degree-2 vertex whose two branch pairs coincide", 7});
        v.push_back({"H2",
                     Graph::from_edges(
                         7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 4}, {5, 6}, {3, 5}, {4, 6}}),
                     "degree-2 vertex with two cross edges between its branch pairs", std::nullopt});
        v.push_back({"H3",
                     Graph::from_edges(8, {{0, 1},
                                           {0, 2},
                                           {1, 3},
                                           {1, 4},
                                           {2, 5},
                                           {2, 6},
                                           {3, 4},
                                           {5, 6},
                                           {3, 5},
                                           {4, 7},
                                           {6, 7}}),
                     "one cross edge plus a shared outer neighbor", std::nullopt});
        v.push_back({"H4",
                     Graph::from_edges(8, {{0, 1},
                                           {1, 2},
                                           {2, 3},
                                           {0, 3},
                                           {0, 2},
                                           {1, 4},
                                           {3, 5},
                                           {4, 6},
                                           {5, 6},
                                           {4, 7},
                                           {5, 7},
                                           {6, 7}}),
                     "chorded 4-cycle whose outer legs share two neighbors", std::nullopt});
        v.push_back({"C5", cycle_graph(5), "cycle", 5});
        v.push_back({"C6", cycle_graph(6), "cycle", 3});
        v.push_back({"C7", cycle_graph(7), "cycle", 4});
        v.push_back({"P4", path_graph(4), "path", 3});
        v.push_back({"claw", Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}), "K_{1,3}", 3});
        v.push_back({"paw", Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}),
                     "triangle with a pendant edge", 4});
        v.push_back({"diamond", Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}),
                     "K4 minus an edge", 5});
        v.push_back({"petersen", petersen_graph(), "Petersen graph", std::nullopt});
        return v;
    }();
    return entries;
}

const Graph& catalog_graph(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e.graph;
    throw std::invalid_argument("no catalog graph named '" + name + "'");
}

Graph gen_k_prism(int k) {
    if (k < 3) throw std::invalid_argument("gen_k_prism: k must be at least 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(i, (i + 1) % k);
        edges.emplace_back(k + i, k + (i + 1) % k);
        edges.emplace_back(i, k + i);
    }
    return Graph::from_edges(2 * k, std::move(edges));
}

Graph triangle_expand(const Graph& h) {
    int n = h.vertex_count();
    for (VertexId v = 0; v < n; ++v)
        if (h.degree(v) != 3) throw std::invalid_argument("triangle_expand: input must be cubic");
    if (!h.connected()) throw std::invalid_argument("triangle_expand: input must be connected");

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < n; ++v)
        for (int r = 0; r < 3; ++r)
            for (int s = r + 1; s < 3; ++s) edges.emplace_back(3 * v + r, 3 * v + s);
    auto rank = [&](VertexId v, VertexId w) {
        const auto& nb = h.neighbors(v);
        return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
    };
    for (const Edge& e : h.edges()) edges.emplace_back(3 * e.u + rank(e.u, e.v), 3 * e.v + rank(e.v, e.u));
    return Graph::from_edges(3 * n, std::move(edges));
}

namespace {

// Levels of the augmentation lattice: canonical forms of every subcubic
// graph (connected or not) on k vertices, sorted.  Grown on demand.
std::vector<std::vector<std::string>>& enumeration_levels() {
    static std::vector<std::vector<std::string>> levels;
    return levels;
}
std::mutex enumeration_mutex;

void grow_levels(int n) {
    auto& levels = enumeration_levels();
    if (levels.empty())
        levels.push_back({canonical_form(Graph::from_edges(1, {}))});
    while (static_cast<int>(levels.size()) < n) {
        int k = static_cast<int>(levels.size());
        std::unordered_set<std::string> next;
        for (const std::string& form : levels.back()) {
            Graph parent = from_canonical_form(form);
            std::vector<VertexId> eligible;
            for (VertexId v = 0; v < k; ++v)
                if (parent.degree(v) < 3) eligible.push_back(v);
            size_t subsets = 1u << eligible.size();
            for (size_t mask = 0; mask < subsets; ++mask) {
                if (__builtin_popcountll(mask) > 3) continue;
                std::vector<std::pair<VertexId, VertexId>> edges;
                for (const Edge& e : parent.edges()) edges.emplace_back(e.u, e.v);
                for (size_t i = 0; i < eligible.size(); ++i)
                    if (mask & (1u << i)) edges.emplace_back(eligible[i], k);
                next.insert(canonical_form(Graph::from_edges(k + 1, std::move(edges))));
            }
        }
        std::vector<std::string> sorted(next.begin(), next.end());
        std::sort(sorted.begin(), sorted.end());
        levels.push_back(std::move(sorted));
    }
}

}  // namespace

std::vector<Graph> enumerate_connected_subcubic(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("enumerate_connected_subcubic: n must be in [1,10]");
    std::lock_guard<std::mutex> lock(enumeration_mutex);
    grow_levels(n);
    std::vector<Graph> out;
    for (const std::string& form : enumeration_levels()[static_cast<size_t>(n - 1)]) {
        Graph g = from_canonical_form(form);
        if (g.connected()) out.push_back(std::move(g));
    }
    return out;
}

Graph random_claw_free_subcubic(int n, uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_claw_free_subcubic: n must be at least 3");
    std::mt19937_64 rng(seed);
    auto pick = [&](size_t count) { return static_cast<size_t>(rng() % count); };

    // Grown as adjacency lists; every move keeps the graph connected,
    // subcubic and claw-free.
    std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::vector<VertexId>> adj = {{1, 2}, {0, 2}, {0, 1}};
    auto adjacent = [&](VertexId a, VertexId b) {
        for (VertexId w : adj[static_cast<size_t>(a)])
            if (w == b) return true;
        return false;
    };
    auto link = [&](VertexId a, VertexId b) {
        edges.emplace_back(a, b);
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    };
    auto deg = [&](VertexId v) { return static_cast<int>(adj[static_cast<size_t>(v)].size()); };

    int stall = 0;
    while (static_cast<int>(adj.size()) < n && stall < 40 * n) {
        ++stall;
        int vcount = static_cast<int>(adj.size());
        switch (rng() % 4) {
            case 0: {  // attach a triangle at a vertex with two free slots
                std::vector<VertexId> cand;
                for (VertexId v = 0; v < vcount; ++v)
                    if (deg(v) <= 1) cand.push_back(v);
                if (cand.empty() || vcount + 2 > n) break;
                VertexId v = cand[pick(cand.size())];
                adj.emplace_back();
                adj.emplace_back();
                link(v, vcount);
                link(v, vcount + 1);
                link(vcount, vcount + 1);
                stall = 0;
                break;
            }
            case 1: {  // pendant edge where it cannot create a claw
                std::vector<VertexId> cand;
                for (VertexId v = 0; v < vcount; ++v) {
                    int d = deg(v);
                    if (d <= 1) cand.push_back(v);
                    else if (d == 2 && adjacent(adj[static_cast<size_t>(v)][0], adj[static_cast<size_t>(v)][1]))
                        cand.push_back(v);
                }
                if (cand.empty() || vcount + 1 > n) break;
                VertexId v = cand[pick(cand.size())];
                adj.emplace_back();
                link(v, vcount);
                stall = 0;
                break;
            }
            case 2: {  // close a cherry into a triangle
                std::vector<std::pair<VertexId, VertexId>> cand;
                for (VertexId v = 0; v < vcount; ++v) {
                    if (deg(v) != 2) continue;
                    VertexId a = adj[static_cast<size_t>(v)][0], b = adj[static_cast<size_t>(v)][1];
                    if (deg(a) >= 3 || deg(b) >= 3 || adjacent(a, b)) continue;
                    cand.emplace_back(std::min(a, b), std::max(a, b));
                }
                if (cand.empty()) break;
                auto [a, b] = cand[pick(cand.size())];
                if (!adjacent(a, b)) link(a, b);
                break;
            }
            default: {  // join two leaves
                std::vector<VertexId> leaves;
                for (VertexId v = 0; v < vcount; ++v)
                    if (deg(v) == 1) leaves.push_back(v);
                if (leaves.size() < 2) break;
                VertexId a = leaves[pick(leaves.size())];
                VertexId b = leaves[pick(leaves.size())];
                if (a != b && !adjacent(a, b)) link(a, b);
                break;
            }
        }
    }
    Graph g = Graph::from_edges(static_cast<int>(adj.size()), std::move(edges));
    if (!g.connected() || g.max_degree() > 3 || !is_claw_free(g))
        throw std::logic_error("random_claw_free_subcubic: growth produced an invalid graph");
    return g;
}

}  // namespace sec
