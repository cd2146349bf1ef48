#include "sec/recognition.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "sec/io.hpp"

namespace sec {

const char* case_name(CaseKind k) {
    switch (k) {
        case CaseKind::NotClawFree: return "not-claw-free";
        case CaseKind::NotSubcubic: return "not-subcubic";
        case CaseKind::Prism3: return "3-prism";
        case CaseKind::K4: return "K4";
        case CaseKind::K4Delta: return "K4-expanded";
        case CaseKind::HasDegree1: return "degree-1";
        case CaseKind::HasDegree2: return "degree-2";
        case CaseKind::CubicCutVertex: return "cut-vertex";
        case CaseKind::ChordedC4: return "chorded-4-cycle";
        case CaseKind::InducedC4: return "induced-4-cycle";
        case CaseKind::TriangleCovered: return "triangle-covered";
    }
    return "?";
}

std::string CaseTag::str() const {
    std::ostringstream os;
    os << case_name(kind);
    if (!vertices.empty()) {
        os << " [";
        for (size_t i = 0; i < vertices.size(); ++i) os << (i ? "," : "") << vertices[i];
        os << "]";
    }
    return os.str();
}

bool is_claw_free(const Graph& g, std::optional<ClawWitness>* witness) {
    if (witness) witness->reset();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        size_t d = nb.size();
        if (d < 3) continue;
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i + 1; j < d; ++j)
                for (size_t k = j + 1; k < d; ++k) {
                    if (!g.has_edge(nb[i], nb[j]) && !g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) {
                        if (witness) *witness = ClawWitness{v, {nb[i], nb[j], nb[k]}};
                        return false;
                    }
                }
    }
    return true;
}

std::vector<VertexId> cut_vertices(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("cut_vertices: graph must be connected");
    int n = g.vertex_count();
    if (n <= 2) return {};
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0),
        parent(static_cast<size_t>(n), -1), children(static_cast<size_t>(n), 0);
    std::vector<char> cut(static_cast<size_t>(n), 0);
    int timer = 0;
    std::vector<std::pair<VertexId, size_t>> stack;
    disc[0] = low[0] = timer++;
    stack.emplace_back(0, 0);
    while (!stack.empty()) {
        VertexId v = stack.back().first;
        size_t idx = stack.back().second;
        const auto& nb = g.neighbors(v);
        if (idx < nb.size()) {
            ++stack.back().second;
            VertexId w = nb[idx];
            if (disc[static_cast<size_t>(w)] == -1) {
                parent[static_cast<size_t>(w)] = v;
                ++children[static_cast<size_t>(v)];
                disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                stack.emplace_back(w, 0);
            } else if (w != parent[static_cast<size_t>(v)]) {
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(w)]);
            }
        } else {
            stack.pop_back();
            VertexId p = parent[static_cast<size_t>(v)];
            if (p >= 0) {
                low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
                if (parent[static_cast<size_t>(p)] >= 0 &&
                    low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(p)])
                    cut[static_cast<size_t>(p)] = 1;
            }
        }
    }
    if (children[0] >= 2) cut[0] = 1;
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v)
        if (cut[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

std::optional<FourCycle> find_c4(const Graph& g) {
    std::optional<FourCycle> chordless;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        VertexId a = g.edge(e).u, b = g.edge(e).v;
        for (VertexId x : g.neighbors(a)) {
            if (x == b) continue;
            for (VertexId y : g.neighbors(b)) {
                if (y == a || y == x) continue;
                if (!g.has_edge(x, y)) continue;
                FourCycle c4;
                c4.cycle = {a, b, y, x};
                if (auto d1 = g.edge_between(a, y))
                    c4.chord = d1;
                else if (auto d2 = g.edge_between(b, x))
                    c4.chord = d2;
                if (c4.chord) return c4;
                if (!chordless) chordless = c4;
            }
        }
    }
    return chordless;
}

std::optional<std::vector<std::array<VertexId, 3>>> triangle_partition(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0 || n % 3 != 0) return std::nullopt;
    if (!g.connected() || !is_claw_free(g) || find_c4(g).has_value()) return std::nullopt;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) != 3) return std::nullopt;

    std::vector<int> tri_of(static_cast<size_t>(n), -1);
    std::vector<std::array<VertexId, 3>> tris;
    for (VertexId v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        // With claws and 4-cycles excluded, exactly one neighbor pair is
        // adjacent; it identifies v's triangle.
        int pairs = 0;
        VertexId a = -1, b = -1;
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i + 1; j < 3; ++j)
                if (g.has_edge(nb[i], nb[j])) {
                    ++pairs;
                    a = nb[i];
                    b = nb[j];
                }
        if (pairs != 1) return std::nullopt;
        if (tri_of[static_cast<size_t>(v)] >= 0) {
            const auto& t = tris[static_cast<size_t>(tri_of[static_cast<size_t>(v)])];
            bool ok = (t[0] == v || t[1] == v || t[2] == v) &&
                      (t[0] == a || t[1] == a || t[2] == a) &&
                      (t[0] == b || t[1] == b || t[2] == b);
            if (!ok) return std::nullopt;
            continue;
        }
        if (tri_of[static_cast<size_t>(a)] >= 0 || tri_of[static_cast<size_t>(b)] >= 0) return std::nullopt;
        std::array<VertexId, 3> t{v, a, b};
        std::sort(t.begin(), t.end());
        int id = static_cast<int>(tris.size());
        tris.push_back(t);
        for (VertexId w : t) tri_of[static_cast<size_t>(w)] = id;
    }
    return tris;
}

ContractedGraph contract_triangles(const Graph& g, const std::vector<std::array<VertexId, 3>>& triangles) {
    ContractedGraph out;
    out.triangles = triangles;
    out.triangle_of.assign(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t t = 0; t < triangles.size(); ++t)
        for (VertexId v : triangles[t]) {
            g.check_vertex(v);
            if (out.triangle_of[static_cast<size_t>(v)] >= 0)
                throw std::invalid_argument("contract_triangles: triangles overlap");
            out.triangle_of[static_cast<size_t>(v)] = static_cast<int>(t);
        }
    for (int t : out.triangle_of)
        if (t < 0) throw std::invalid_argument("contract_triangles: not a vertex cover");

    std::vector<std::tuple<int, int, EdgeId>> quot;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int tu = out.triangle_of[static_cast<size_t>(g.edge(e).u)];
        int tv = out.triangle_of[static_cast<size_t>(g.edge(e).v)];
        if (tu == tv) continue;
        if (tu > tv) std::swap(tu, tv);
        quot.emplace_back(tu, tv, e);
    }
    std::sort(quot.begin(), quot.end());
    for (size_t i = 1; i < quot.size(); ++i)
        if (std::get<0>(quot[i]) == std::get<0>(quot[i - 1]) && std::get<1>(quot[i]) == std::get<1>(quot[i - 1]))
            throw std::invalid_argument("contract_triangles: parallel edges between triangles");
    std::vector<std::pair<VertexId, VertexId>> qe;
    qe.reserve(quot.size());
    for (auto& [a, b, src] : quot) {
        qe.emplace_back(a, b);
        out.source_edge.push_back(src);
    }
    // Sorted unique pairs: ids in the built graph match positions.
    out.quotient = Graph::from_edges(static_cast<int>(triangles.size()), std::move(qe));
    return out;
}

std::vector<VertexId> shortest_cycle(const Graph& g) {
    int n = g.vertex_count();
    int best_len = n + 1;
    std::vector<VertexId> best;
    std::vector<int> depth(static_cast<size_t>(n)), par(static_cast<size_t>(n));

    auto extract = [&](VertexId u, VertexId w) {
        // Cycle through the BFS tree paths of u and w plus the edge uw.
        std::vector<VertexId> pu, pw;
        for (VertexId x = u; x != -1; x = par[static_cast<size_t>(x)]) pu.push_back(x);
        for (VertexId x = w; x != -1; x = par[static_cast<size_t>(x)]) pw.push_back(x);
        std::vector<char> on_pu(static_cast<size_t>(n), 0);
        for (VertexId x : pu) on_pu[static_cast<size_t>(x)] = 1;
        VertexId lca = -1;
        for (VertexId x : pw)
            if (on_pu[static_cast<size_t>(x)]) {
                lca = x;
                break;
            }
        std::vector<VertexId> cyc;
        for (VertexId x : pu) {
            cyc.push_back(x);
            if (x == lca) break;
        }
        std::vector<VertexId> tail;
        for (VertexId x : pw) {
            if (x == lca) break;
            tail.push_back(x);
        }
        std::reverse(tail.begin(), tail.end());
        cyc.insert(cyc.end(), tail.begin(), tail.end());
        return cyc;
    };

    std::deque<VertexId> queue;
    for (VertexId s = 0; s < n; ++s) {
        std::fill(depth.begin(), depth.end(), -1);
        queue.clear();
        depth[static_cast<size_t>(s)] = 0;
        par[static_cast<size_t>(s)] = -1;
        queue.push_back(s);
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            if (2 * depth[static_cast<size_t>(u)] + 1 >= best_len) break;
            for (VertexId w : g.neighbors(u)) {
                if (w == par[static_cast<size_t>(u)]) continue;
                if (depth[static_cast<size_t>(w)] == -1) {
                    depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(u)] + 1;
                    par[static_cast<size_t>(w)] = u;
                    queue.push_back(w);
                } else {
                    auto cyc = extract(u, w);
                    if (static_cast<int>(cyc.size()) < best_len) {
                        best_len = static_cast<int>(cyc.size());
                        best = cyc;
                    }
                }
            }
        }
    }
    return best;
}

namespace {

// All cyclic labelings of a lifted cycle that keep the triangle pairing:
// rotations by whole pairs and the reversed traversal.
std::vector<VertexId> rotate_paired(const std::vector<VertexId>& cyc, int pair_shift, bool reverse) {
    size_t len = cyc.size();
    std::vector<VertexId> out(len);
    for (size_t i = 0; i < len; ++i) {
        size_t j = (i + 2 * static_cast<size_t>(pair_shift)) % len;
        out[i] = cyc[j];
    }
    if (reverse) std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<VertexId> min_induced_even_cycle(const Graph& g) {
    auto tris = triangle_partition(g);
    if (!tris) throw std::invalid_argument("min_induced_even_cycle: graph is not triangle-covered");
    ContractedGraph cg = contract_triangles(g, *tris);
    std::vector<VertexId> tcyc = shortest_cycle(cg.quotient);
    if (tcyc.empty()) throw std::invalid_argument("min_induced_even_cycle: contraction is acyclic");
    int p = static_cast<int>(tcyc.size());

    // Lift: triangle j contributes the endpoints of its two cycle edges.
    std::vector<VertexId> lifted;
    lifted.reserve(2 * static_cast<size_t>(p));
    for (int j = 0; j < p; ++j) {
        int prev = tcyc[static_cast<size_t>((j + p - 1) % p)];
        int cur = tcyc[static_cast<size_t>(j)];
        int next = tcyc[static_cast<size_t>((j + 1) % p)];
        auto qe_in = cg.quotient.edge_between(std::min(prev, cur), std::max(prev, cur));
        auto qe_out = cg.quotient.edge_between(std::min(cur, next), std::max(cur, next));
        if (!qe_in || !qe_out) throw std::logic_error("min_induced_even_cycle: broken contraction cycle");
        EdgeId ein = cg.source_edge[static_cast<size_t>(*qe_in)];
        EdgeId eout = cg.source_edge[static_cast<size_t>(*qe_out)];
        auto in_cur = [&](VertexId v) { return cg.triangle_of[static_cast<size_t>(v)] == cur; };
        VertexId a = in_cur(g.edge(ein).u) ? g.edge(ein).u : g.edge(ein).v;
        VertexId b = in_cur(g.edge(eout).u) ? g.edge(eout).u : g.edge(eout).v;
        if (a == b) throw std::logic_error("min_induced_even_cycle: cycle edges share a port");
        lifted.push_back(a);
        lifted.push_back(b);
    }

    // Deterministic representative among the pair-preserving labelings.
    std::vector<VertexId> least = lifted;
    for (int shift = 0; shift < p; ++shift)
        for (bool rev : {false, true}) {
            auto cand = rotate_paired(lifted, shift, rev);
            if (cand < least) least = cand;
        }
    return least;
}

bool iso_small(const Graph& g, const Graph& h) {
    if (g.vertex_count() > 16 || h.vertex_count() > 16)
        throw std::invalid_argument("iso_small: limited to 16 vertices");
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (VertexId v = 0; v < n; ++v) dg.push_back(g.degree(v));
    for (VertexId v = 0; v < n; ++v) dh.push_back(h.degree(v));
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return false;
    }
    if (n == 0) return true;

    // Map vertices of g in a BFS order so every non-root candidate is pruned
    // by an already-mapped neighbor.
    std::vector<VertexId> order;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int comp_root = 0; comp_root < n; ++comp_root) {
        if (seen[static_cast<size_t>(comp_root)]) continue;
        std::deque<VertexId> queue{comp_root};
        seen[static_cast<size_t>(comp_root)] = 1;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (VertexId w : g.neighbors(v))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    queue.push_back(w);
                }
        }
    }

    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    auto consistent = [&](VertexId gv, VertexId hv) {
        if (dg[static_cast<size_t>(gv)] != dh[static_cast<size_t>(hv)]) return false;
        for (VertexId w = 0; w < n; ++w) {
            if (map[static_cast<size_t>(w)] < 0) continue;
            if (g.has_edge(gv, w) != h.has_edge(hv, map[static_cast<size_t>(w)])) return false;
        }
        return true;
    };
    std::vector<size_t> cand_idx(static_cast<size_t>(n), 0);
    size_t pos = 0;
    while (true) {
        if (pos == order.size()) return true;
        VertexId gv = order[pos];
        bool advanced = false;
        for (VertexId hv = static_cast<VertexId>(cand_idx[pos]); hv < n; ++hv) {
            if (used[static_cast<size_t>(hv)] || !consistent(gv, hv)) continue;
            map[static_cast<size_t>(gv)] = hv;
            used[static_cast<size_t>(hv)] = 1;
            cand_idx[pos] = static_cast<size_t>(hv) + 1;
            ++pos;
            if (pos < order.size()) cand_idx[pos] = 0;
            advanced = true;
            break;
        }
        if (advanced) continue;
        cand_idx[pos] = 0;
        if (pos == 0) return false;
        --pos;
        VertexId prev = order[pos];
        used[static_cast<size_t>(map[static_cast<size_t>(prev)])] = 0;
        map[static_cast<size_t>(prev)] = -1;
    }
}

namespace {

struct CanonState {
    const Graph* g;
    int n;
    std::vector<uint16_t> row;       // adjacency bitmask per vertex
    std::vector<int> perm;           // position -> original vertex
    std::vector<char> used;
    std::vector<uint16_t> best;      // per-position packed column blocks
    std::vector<int> best_perm;

    uint16_t block(int k, VertexId v) const {
        uint16_t b = 0;
        for (int i = 0; i < k; ++i)
            b = static_cast<uint16_t>((b << 1) | ((row[static_cast<size_t>(perm[static_cast<size_t>(i)])] >>
                                                   v) & 1u));
        return b;
    }

    void greedy_complete(int from) {
        for (int k = from; k < n; ++k) {
            int pick = -1;
            uint16_t pick_block = 0;
            for (VertexId v = 0; v < n; ++v) {
                if (used[static_cast<size_t>(v)]) continue;
                uint16_t b = block(k, v);
                if (pick < 0 || b < pick_block) {
                    pick = v;
                    pick_block = b;
                }
            }
            perm[static_cast<size_t>(k)] = pick;
            used[static_cast<size_t>(pick)] = 1;
            best[static_cast<size_t>(k)] = pick_block;
        }
        best_perm = perm;
        for (int k = from; k < n; ++k) used[static_cast<size_t>(perm[static_cast<size_t>(k)])] = 0;
    }

    void dfs(int k) {
        if (k == n) {
            best_perm = perm;
            return;
        }
        for (VertexId v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            uint16_t b = block(k, v);
            if (b > best[static_cast<size_t>(k)]) continue;
            perm[static_cast<size_t>(k)] = v;
            used[static_cast<size_t>(v)] = 1;
            if (b < best[static_cast<size_t>(k)]) {
                // Strictly better prefix: adopt it with a greedy completion,
                // then keep searching below it.
                best[static_cast<size_t>(k)] = b;
                greedy_complete(k + 1);
            }
            dfs(k + 1);
            used[static_cast<size_t>(v)] = 0;
        }
        perm[static_cast<size_t>(k)] = -1;
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > 12) throw std::invalid_argument("canonical_form: limited to 12 vertices");
    if (n == 0) return write_graph6(g);
    CanonState st;
    st.g = &g;
    st.n = n;
    st.row.assign(static_cast<size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        st.row[static_cast<size_t>(e.u)] |= static_cast<uint16_t>(1u << e.v);
        st.row[static_cast<size_t>(e.v)] |= static_cast<uint16_t>(1u << e.u);
    }
    st.perm.assign(static_cast<size_t>(n), -1);
    st.used.assign(static_cast<size_t>(n), 0);
    st.best.assign(static_cast<size_t>(n), 0xffff);
    st.greedy_complete(0);
    st.dfs(0);

    std::vector<int> pos_of(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) pos_of[static_cast<size_t>(st.best_perm[static_cast<size_t>(k)])] = k;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Edge& e : g.edges())
        edges.emplace_back(pos_of[static_cast<size_t>(e.u)], pos_of[static_cast<size_t>(e.v)]);
    return write_graph6(Graph::from_edges(n, std::move(edges)));
}

Graph from_canonical_form(const std::string& form) { return parse_graph6(form); }

namespace {

Graph make_prism3() {
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph make_k4_expanded() {
    // Each K4 vertex i becomes the triangle {3i, 3i+1, 3i+2}; port r of
    // triangle i serves i's r-th neighbor in ascending order.
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < 4; ++i)
        for (int r = 0; r < 3; ++r)
            for (int s = r + 1; s < 3; ++s) edges.emplace_back(3 * i + r, 3 * i + s);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            int ri = j - (j > i ? 1 : 0);
            int rj = i - (i > j ? 1 : 0);
            edges.emplace_back(3 * i + ri, 3 * j + rj);
        }
    return Graph::from_edges(12, std::move(edges));
}

}  // namespace

CaseTag classify(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("classify: graph must be connected");
    if (g.vertex_count() < 2) throw std::invalid_argument("classify: graph has no edges");

    std::optional<ClawWitness> claw;
    if (!is_claw_free(g, &claw))
        return {CaseKind::NotClawFree, {claw->center, claw->leaves[0], claw->leaves[1], claw->leaves[2]}, {}};
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 3) return {CaseKind::NotSubcubic, {v}, {}};

    int n = g.vertex_count(), m = g.edge_count();
    if (n == 6 && m == 9) {
        static const Graph prism = make_prism3();
        if (iso_small(g, prism)) return {CaseKind::Prism3, {}, {}};
    }
    if (n == 4 && m == 6) return {CaseKind::K4, {}, {}};
    if (n == 12 && m == 18) {
        static const Graph k4x = make_k4_expanded();
        if (iso_small(g, k4x)) return {CaseKind::K4Delta, {}, {}};
    }
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) == 1) return {CaseKind::HasDegree1, {v}, {}};
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) == 2) return {CaseKind::HasDegree2, {v}, {}};

    auto cuts = cut_vertices(g);
    if (!cuts.empty()) return {CaseKind::CubicCutVertex, {cuts.front()}, {}};

    if (auto c4 = find_c4(g)) {
        std::vector<VertexId> cyc(c4->cycle.begin(), c4->cycle.end());
        if (c4->chord) return {CaseKind::ChordedC4, cyc, {*c4->chord}};
        return {CaseKind::InducedC4, cyc, {}};
    }

    if (!triangle_partition(g))
        throw std::logic_error("classify: 2-connected cubic claw-free graph without 4-cycles must be triangle-covered");
    return {CaseKind::TriangleCovered, {}, {}};
}

}  // namespace sec
