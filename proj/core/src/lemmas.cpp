#include "sec/lemmas.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "sec/partial.hpp"
#include "sec/solver.hpp"

namespace sec {

namespace {

[[noreturn]] void bail(const std::string& msg) { throw InvariantViolation(msg); }

void need(bool cond, const std::string& msg) {
    if (!cond) bail(msg);
}

std::string fmt_edge(const Graph& g, EdgeId e) {
    const Edge& ed = g.edge(e);
    return "(" + std::to_string(ed.u) + "," + std::to_string(ed.v) + ")";
}

/// Named role bindings of the active case, kept for the trace.
struct LemmaFrame {
    std::vector<std::pair<std::string, int>> items;
    void v(const std::string& name, VertexId x) { items.emplace_back(name, x); }
    void col(const std::string& name, int c) { items.emplace_back(name + "#", c); }
    std::string str() const {
        std::ostringstream os;
        for (size_t i = 0; i < items.size(); ++i) os << (i ? " " : "") << items[i].first << "=" << items[i].second;
        return os.str();
    }
};

/// Mutating view over a component being colored; every assignment is checked
/// against the recomputed availability, so a slipped structural assumption
/// surfaces as InvariantViolation instead of a bad coloring.
struct Engine {
    const Graph& g;
    PartialColoring c;

    explicit Engine(const Graph& graph) : g(graph), c(graph.edge_count(), 7) {}

    ColorSet avail(EdgeId e) const { return availability(g, c, e); }

    void put(EdgeId e, int color, const char* ctx) {
        need(!c.has_color(e), std::string(ctx) + ": edge " + fmt_edge(g, e) + " already colored");
        need(avail(e).contains(color), std::string(ctx) + ": color " + std::to_string(color) +
                                           " unavailable for " + fmt_edge(g, e));
        c.set(e, color);
    }
    int put_min(EdgeId e, const char* ctx) {
        ColorSet a = avail(e);
        need(!a.empty(), std::string(ctx) + ": no color available for " + fmt_edge(g, e));
        c.set(e, a.min());
        return a.min();
    }
    void recolor(EdgeId e, int color, const char* ctx) {
        need(c.has_color(e), std::string(ctx) + ": recolor of uncolored edge");
        c.unset(e);
        put(e, color, ctx);
    }
    void finish_sdr(const std::vector<EdgeId>& targets, const char* ctx) {
        auto r = sdr_extend(g, c, targets);
        need(r.has_value(), std::string(ctx) + ": no system of distinct representatives");
        c = *r;
    }
    EdgeId eid(VertexId a, VertexId b, const char* ctx) const {
        auto e = g.edge_between(a, b);
        need(e.has_value(), std::string(ctx) + ": missing edge (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
        return *e;
    }
    // The neighbor of v outside {a, b}; v must be cubic.
    VertexId third(VertexId v, VertexId a, VertexId b, const char* ctx) const {
        VertexId out = -1;
        for (VertexId w : g.neighbors(v)) {
            if (w == a || w == b) continue;
            need(out < 0, std::string(ctx) + ": vertex " + std::to_string(v) + " has two spare neighbors");
            out = w;
        }
        need(out >= 0, std::string(ctx) + ": vertex " + std::to_string(v) + " has no spare neighbor");
        return out;
    }
    void expect_uncolored(std::vector<EdgeId> expected, const char* ctx) const {
        std::sort(expected.begin(), expected.end());
        need(c.uncolored() == expected, std::string(ctx) + ": unexpected uncolored edge set");
    }

    ColoringResult finish(CaseTag tag, std::string note) {
        need(verify_strong(g, c, true).empty(), "result failed verification");
        ColoringResult res;
        res.coloring = c;
        res.colors_used = c.colors_used();
        res.exceptional = false;
        res.trace.push_back({std::move(tag), std::move(note)});
        return res;
    }
};

ColoringResult color_component_impl(const Graph& g, int depth);

std::vector<EdgeId> all_edges(const Graph& g) {
    std::vector<EdgeId> out(static_cast<size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) out[static_cast<size_t>(e)] = e;
    return out;
}

std::vector<EdgeId> colored_edges(const PartialColoring& c) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < c.size(); ++e)
        if (c.has_color(e)) out.push_back(e);
    return out;
}

ColorSet cset_colors(const PartialColoring& c, std::initializer_list<EdgeId> edges) {
    ColorSet s;
    for (EdgeId e : edges)
        if (c.has_color(e)) s.add(c.color(e));
    return s;
}

}  // namespace

PartialColoring permute_colors(const PartialColoring& c, const std::vector<EdgeId>& edge_set,
                               const std::vector<int>& bijection) {
    int k = c.palette_size();
    if (static_cast<int>(bijection.size()) != k + 1)
        throw std::invalid_argument("permute_colors: bijection must have palette_size + 1 entries");
    std::vector<char> hit(static_cast<size_t>(k + 1), 0);
    for (int col = 1; col <= k; ++col) {
        int img = bijection[static_cast<size_t>(col)];
        if (img < 1 || img > k || hit[static_cast<size_t>(img)])
            throw std::invalid_argument("permute_colors: not a palette bijection");
        hit[static_cast<size_t>(img)] = 1;
    }
    PartialColoring out = c;
    for (EdgeId e : edge_set)
        if (out.has_color(e)) out.set(e, bijection[static_cast<size_t>(out.color(e))]);
    return out;
}

ColoringResult small_case_solve(const Graph& g) {
    if (g.edge_count() > 40) throw std::invalid_argument("small_case_solve: more than 40 edges");
    ChiSResult r = exact_chi_s(g);
    need(r.value.has_value(), "small case: exact solver ran out of budget");
    need(*r.value <= 7, "small case: chromatic index above 7 contradicts the case analysis");
    ColoringResult res;
    res.coloring = PartialColoring(g.edge_count(), 7);
    for (EdgeId e = 0; e < g.edge_count(); ++e) res.coloring.set(e, r.certificate->color(e));
    need(verify_strong(g, res.coloring, true).empty(), "small case: certificate failed verification");
    res.colors_used = res.coloring.colors_used();
    res.exceptional = false;
    res.trace.push_back({classify(g), "solved exactly, chi_s=" + std::to_string(*r.value)});
    return res;
}

// ---------------------------------------------------------------------------
// degree 1

ColoringResult extend_degree1(const Graph& g, VertexId v0) {
    need(g.degree(v0) == 1, "degree-1 handler needs a degree-1 vertex");
    Engine E(g);
    EdgeId e0 = g.incident(v0)[0];
    E.c = greedy_partial(g, {v0});
    E.expect_uncolored({e0}, "degree-1");
    need(E.avail(e0).count() >= 2, "degree-1: the pendant edge sees at most five colors");
    E.put_min(e0, "degree-1");
    LemmaFrame fr;
    fr.v("v0", v0);
    return E.finish({CaseKind::HasDegree1, {v0}, {}}, fr.str());
}

// ---------------------------------------------------------------------------
// degree 2

namespace {

// Seed at a degree-2 vertex whose situation makes both of its edges cheap to
// finish: greedy everything else, then a 2-edge SDR.
ColoringResult degree2_anchor(const Graph& g, VertexId pivot, LemmaFrame fr, const char* what) {
    Engine E(g);
    E.c = greedy_partial(g, {pivot});
    std::vector<EdgeId> mine(g.incident(pivot).begin(), g.incident(pivot).end());
    E.expect_uncolored(mine, what);
    int c0 = E.avail(mine[0]).count(), c1 = E.avail(mine[1]).count();
    need(std::max(c0, c1) >= 2 && std::min(c0, c1) >= 1, std::string(what) + ": availability bound failed");
    E.finish_sdr(mine, what);
    fr.v("anchor", pivot);
    return E.finish({CaseKind::HasDegree2, {pivot}, {}}, fr.str());
}

struct Deg2Side {
    EdgeId e;   // branch edge at v0
    EdgeId fa;  // the two edges from the branch vertex into its pair
    EdgeId fb;
    EdgeId ge;  // the pair edge
};

// One cross edge between the branch pairs.
ColoringResult degree2_case1(const Graph& g, VertexId v0, VertexId v1, VertexId v2, VertexId u1,
                             VertexId u1p, VertexId u2, VertexId u2p) {
    LemmaFrame fr;
    fr.v("v0", v0);
    fr.v("v1", v1);
    fr.v("v2", v2);
    fr.v("u1", u1);
    fr.v("u1'", u1p);
    fr.v("u2", u2);
    fr.v("u2'", u2p);

    // Shared outer neighbor closes the graph into the 8-vertex terminal case.
    {
        std::vector<VertexId> common;
        for (VertexId x : g.neighbors(u1p))
            if (g.has_edge(u2p, x) ||
                std::find(g.neighbors(u2p).begin(), g.neighbors(u2p).end(), x) != g.neighbors(u2p).end())
                common.push_back(x);
        if (!common.empty()) {
            need(g.vertex_count() == 8 && g.edge_count() == 11,
                 "degree-2 case 1: shared outer neighbor but not the 8-vertex terminal graph");
            ColoringResult res = small_case_solve(g);
            res.trace.push_back({{CaseKind::HasDegree2, {v0}, {}}, "terminal H3 form: " + fr.str()});
            return res;
        }
    }

    Engine E(g);
    E.c = greedy_partial(g, {v0, v1, v2, u1, u2});
    const char* ctx = "degree-2 case 1";
    EdgeId e1 = E.eid(v1, u1, ctx), e2 = E.eid(v0, v1, ctx), e3 = E.eid(u1, u2, ctx),
           e4 = E.eid(v2, u2, ctx), e5 = E.eid(v0, v2, ctx);
    EdgeId f1 = E.eid(v1, u1p, ctx), f2 = E.eid(u1, u1p, ctx), f3 = E.eid(v2, u2p, ctx),
           f4 = E.eid(u2, u2p, ctx);
    E.expect_uncolored({e1, e2, e3, e4, e5, f1, f2, f3, f4}, ctx);
    for (EdgeId e : {e1, e2, e4, e5})
        need(E.avail(e).count() == 6, "degree-2 case 1: spine edge must have six colors");
    need(E.avail(e3).count() >= 5, "degree-2 case 1: cross edge must have five colors");
    for (EdgeId f : {f1, f2, f3, f4})
        need(E.avail(f).count() >= 4, "degree-2 case 1: pair edge must have four colors");

    ColorSet ac = E.avail(f1) & E.avail(f3);
    need(!ac.empty(), "degree-2 case 1: no shared color for the outer pair edges");
    int alpha = ac.min();
    E.put(f1, alpha, ctx);
    E.put(f3, alpha, ctx);
    ColorSet bc = E.avail(e5) & E.avail(f2);
    need(!bc.empty(), "degree-2 case 1: no shared color for e5 and f2");
    int beta = bc.min();
    E.put(e5, beta, ctx);
    E.put(f2, beta, ctx);
    fr.col("alpha", alpha);
    fr.col("beta", beta);

    ColorSet gc = E.avail(e2) & E.avail(f4);
    if (!gc.empty()) {
        int gamma = gc.min();
        E.put(e2, gamma, ctx);
        E.put(f4, gamma, ctx);
        fr.col("gamma", gamma);
        E.finish_sdr({e3, e4, e1}, ctx);
    } else {
        for (EdgeId e : {f4, e3, e4, e1, e2}) E.put_min(e, ctx);
    }
    return E.finish({CaseKind::HasDegree2, {v0}, {}}, "case 1: " + fr.str());
}

// No cross edge: the subcase loop on the two branch availabilities.
ColoringResult degree2_case2(const Graph& g, VertexId v0, VertexId v1, VertexId v2, VertexId u1,
                             VertexId u1p, VertexId u2, VertexId u2p) {
    const char* ctx = "degree-2 case 2";
    LemmaFrame fr;
    fr.v("v0", v0);
    fr.v("v1", v1);
    fr.v("v2", v2);

    Engine E(g);
    E.c = greedy_partial(g, {v0, v1, v2});
    Deg2Side s1{E.eid(v0, v1, ctx), E.eid(v1, u1, ctx), E.eid(v1, u1p, ctx), E.eid(u1, u1p, ctx)};
    Deg2Side s2{E.eid(v0, v2, ctx), E.eid(v2, u2, ctx), E.eid(v2, u2p, ctx), E.eid(u2, u2p, ctx)};
    E.expect_uncolored({s1.e, s2.e, s1.fa, s1.fb, s2.fa, s2.fb}, ctx);

    for (int iter = 0; iter < 6; ++iter) {
        ColorSet A1 = E.avail(s1.e), A2 = E.avail(s2.e);
        need(A1.count() == 4 && A2.count() == 4, "degree-2 case 2: branch edges must have four colors");
        for (EdgeId f : {s1.fa, s1.fb})
            need(E.avail(f).count() >= 2 && (E.avail(f) - A1).empty(),
                 "degree-2 case 2: side list out of bounds");
        for (EdgeId f : {s2.fa, s2.fb})
            need(E.avail(f).count() >= 2 && (E.avail(f) - A2).empty(),
                 "degree-2 case 2: side list out of bounds");
        ColorSet inter = A1 & A2;
        int t = inter.count();
        need(t >= 1 && t <= 4, "degree-2 case 2: branch availabilities cannot be disjoint");

        if (t == 1) {
            for (EdgeId e : {s1.fa, s1.fb, s2.fa, s2.fb, s1.e, s2.e}) E.put_min(e, ctx);
            return E.finish({CaseKind::HasDegree2, {v0}, {}}, "case 2.1: " + fr.str());
        }

        if (t == 2) {
            ColorSet U = E.avail(s1.fa) | E.avail(s1.fb);
            ColorSet V = E.avail(s2.fa) | E.avail(s2.fb);
            ColorSet common = inter & U & V;
            if (!common.empty()) {
                int ac = common.min();
                EdgeId fi = E.avail(s1.fa).contains(ac) ? s1.fa : s1.fb;
                EdgeId fj = E.avail(s2.fa).contains(ac) ? s2.fa : s2.fb;
                need(E.avail(fi).contains(ac) && E.avail(fj).contains(ac),
                     "degree-2 case 2.2: shared color misses both side edges");
                E.put(fi, ac, ctx);
                E.put(fj, ac, ctx);
                E.put_min(fi == s1.fa ? s1.fb : s1.fa, ctx);
                E.put_min(fj == s2.fa ? s2.fb : s2.fa, ctx);
                E.put_min(s1.e, ctx);
                E.put_min(s2.e, ctx);
                return E.finish({CaseKind::HasDegree2, {v0}, {}}, "case 2.2 shared: " + fr.str());
            }
            if ((inter & U).empty() && (inter & V).empty()) {
                ColorSet X = A1 - inter, Y = A2 - inter;
                need(E.avail(s1.fa) == X && E.avail(s1.fb) == X && E.avail(s2.fa) == Y &&
                         E.avail(s2.fb) == Y,
                     "degree-2 case 2.2: side lists must equal the private colors");
                for (EdgeId e : {s1.fa, s1.fb, s2.fa, s2.fb, s1.e, s2.e}) E.put_min(e, ctx);
                return E.finish({CaseKind::HasDegree2, {v0}, {}}, "case 2.2 disjoint: " + fr.str());
            }
            // One side holds a common color; normalize it onto s1.fa.
            if ((inter & U).empty()) {
                std::swap(s1, s2);
                std::swap(A1, A2);
                std::swap(U, V);
            }
            int a1c = (inter & U).min();
            if (!E.avail(s1.fa).contains(a1c)) std::swap(s1.fa, s1.fb);
            need(E.avail(s1.fa).contains(a1c), "degree-2 case 2.2: lost the common color");
            if (U != inter) {
                int beta;
                if (E.avail(s1.fb).contains(a1c)) {
                    ColorSet pool = U - inter;
                    need(!pool.empty(), "degree-2 case 2.2: no spare side color");
                    beta = pool.min();
                    if (E.avail(s1.fb).contains(beta)) {
                        E.put(s1.fa, a1c, ctx);
                        E.put(s1.fb, beta, ctx);
                    } else {
                        need(E.avail(s1.fa).contains(beta), "degree-2 case 2.2: spare color lost");
                        E.put(s1.fa, beta, ctx);
                        E.put(s1.fb, a1c, ctx);
                    }
                } else {
                    ColorSet pool = E.avail(s1.fb) - inter;
                    need(!pool.empty(), "degree-2 case 2.2: no spare color on the second edge");
                    beta = pool.min();
                    E.put(s1.fa, a1c, ctx);
                    E.put(s1.fb, beta, ctx);
                }
                for (EdgeId e : {s2.fa, s2.fb, s2.e, s1.e}) E.put_min(e, ctx);
                return E.finish({CaseKind::HasDegree2, {v0}, {}}, "case 2.2 one-sided: " + fr.str());
            }
            // Side list equals the two common colors: free them via the pair edge.
            need(E.avail(s1.fa) == inter && E.avail(s1.fb) == inter,
                 "degree-2 case 2.2: side lists must equal the common pair");
            ColorSet Y = A2 - inter;
            need(E.avail(s2.fa) == Y && E.avail(s2.fb) == Y,
                 "degree-2 case 2.2: far side must hold the private colors");
            int old_g = E.c.color(s1.ge);
            E.recolor(s1.ge, a1c, ctx);
            int a2c = (inter - ColorSet::of({a1c})).min();
            E.put(s1.fa, old_g, ctx);
            E.put(s1.fb, a2c, ctx);
            E.put_min(s2.fa, ctx);
            E.put_min(s2.fb, ctx);
            E.put(s2.e, a1c, ctx);
            E.put_min(s1.e, ctx);
            return E.finish({CaseKind::HasDegree2, {v0}, {}}, "case 2.2 recolored: " + fr.str());
        }

        if (t == 3) {
            ColorSet U = E.avail(s1.fa) | E.avail(s1.fb);
            ColorSet V = E.avail(s2.fa) | E.avail(s2.fb);
            ColorSet shared = U & V;
            if (!shared.empty()) {
                need((shared - inter).empty(), "degree-2 case 2.3: shared colors must be common");
                int ac = shared.min();
                EdgeId fi = E.avail(s1.fa).contains(ac) ? s1.fa : s1.fb;
                EdgeId fj = E.avail(s2.fa).contains(ac) ? s2.fa : s2.fb;
                need(E.avail(fi).contains(ac) && E.avail(fj).contains(ac),
                     "degree-2 case 2.3: shared color misses both side edges");
                E.put(fi, ac, ctx);
                E.put(fj, ac, ctx);
                E.put_min(fi == s1.fa ? s1.fb : s1.fa, ctx);
                E.put_min(fj == s2.fa ? s2.fb : s2.fa, ctx);
                E.finish_sdr({s1.e, s2.e}, ctx);
                return E.finish({CaseKind::HasDegree2, {v0}, {}}, "case 2.3 shared: " + fr.str());
            }
            // Recolor the pair edge of a two-color side; prefer a side whose
            // two colors are both common, otherwise progress can stall.
            auto two_common = [&](ColorSet W) { return W.count() == 2 && (W - inter).empty(); };
            Deg2Side* side = nullptr;
            ColorSet W;
            if (two_common(U)) {
                side = &s1;
                W = U;
            } else if (two_common(V)) {
                side = &s2;
                W = V;
            } else if (U.count() == 2) {
                side = &s1;
                W = U;
            } else {
                need(V.count() == 2, "degree-2 case 2.3: some side must have exactly two colors");
                side = &s2;
                W = V;
            }
            need(E.avail(side->fa) == W && E.avail(side->fb) == W,
                 "degree-2 case 2.3: two-color side lists must coincide");
            ColorSet wc = W & inter;
            need(!wc.empty(), "degree-2 case 2.3: side without a common color");
            E.recolor(side->ge, wc.min(), ctx);
            continue;
        }

        // t == 4: both branch edges see the same three colors.
        need(A1 == A2, "degree-2 case 2.4: equal availabilities expected");
        int old1 = E.c.color(s1.ge), old2 = E.c.color(s2.ge);
        E.c.unset(s1.ge);
        E.c.unset(s2.ge);
        ColorSet Ag1 = E.avail(s1.ge), Ag2 = E.avail(s2.ge);
        if (Ag1.count() == 1 && Ag2.count() == 1) {
            E.put(s1.ge, old1, ctx);
            E.put(s2.ge, old2, ctx);
            ColorSet Fa = E.avail(s1.fa), Fb = E.avail(s1.fb);
            ColorSet Ga = E.avail(s2.fa), Gb = E.avail(s2.fb);
            need((Fa & Fb).empty() && (Fa | Fb) == A1 && (Ga & Gb).empty() && (Ga | Gb) == A2,
                 "degree-2 case 2.4: side lists must split the branch availability");
            if (!(Fa & Ga).empty()) {
                ColorSet other = Fb & Gb;
                need(!other.empty(), "degree-2 case 2.4: split lost the partner color");
                E.put(s1.fa, (Fa & Ga).min(), ctx);
                E.put(s2.fa, (Fa & Ga).min(), ctx);
                E.put(s1.fb, other.min(), ctx);
                E.put(s2.fb, other.min(), ctx);
            } else {
                ColorSet x = Fa & Gb, y = Fb & Ga;
                need(!x.empty() && !y.empty(), "degree-2 case 2.4: cross split failed");
                E.put(s1.fa, x.min(), ctx);
                E.put(s2.fb, x.min(), ctx);
                E.put(s1.fb, y.min(), ctx);
                E.put(s2.fa, y.min(), ctx);
            }
            E.put_min(s1.e, ctx);
            E.put_min(s2.e, ctx);
            return E.finish({CaseKind::HasDegree2, {v0}, {}}, "case 2.4 tight: " + fr.str());
        }
        Deg2Side* side = Ag1.count() >= 2 ? &s1 : &s2;
        need((side == &s1 ? Ag1 : Ag2).count() >= 2, "degree-2 case 2.4: some pair edge must be loose");
        if (side == &s1)
            E.put(s2.ge, old2, ctx);
        else
            E.put(s1.ge, old1, ctx);
        ColorSet Ag = E.avail(side->ge) & A1;
        need(!Ag.empty(), "degree-2 case 2.4: loose pair edge must reach a common color");
        E.put(side->ge, Ag.min(), ctx);
        // Back to three common colors.
    }
    bail("degree-2 case 2: subcase loop exceeded its bound");
}

}  // namespace

ColoringResult extend_degree2(const Graph& g, VertexId v0) {
    need(g.degree(v0) == 2, "degree-2 handler needs a degree-2 vertex");
    VertexId v1 = g.neighbors(v0)[0], v2 = g.neighbors(v0)[1];
    if (g.degree(v2) < g.degree(v1)) std::swap(v1, v2);  // prefer a degree-2 branch as v1
    LemmaFrame fr;
    fr.v("v0", v0);
    fr.v("v1", v1);
    fr.v("v2", v2);
    if (g.has_edge(v1, v2) || g.degree(v1) == 2)
        return degree2_anchor(g, v0, fr, "degree-2 adjacent-branches");
    need(g.degree(v1) == 3 && g.degree(v2) == 3, "degree-2: branch vertices must be cubic here");

    auto pair_of = [&](VertexId vi, const char* ctx) {
        std::vector<VertexId> us;
        for (VertexId w : g.neighbors(vi))
            if (w != v0) us.push_back(w);
        need(us.size() == 2, ctx);
        return std::pair<VertexId, VertexId>(us[0], us[1]);
    };
    auto [u1, u1p] = pair_of(v1, "degree-2: branch pair");
    auto [u2, u2p] = pair_of(v2, "degree-2: branch pair");
    need(g.has_edge(u1, u1p) && g.has_edge(u2, u2p),
         "degree-2: claw-freeness forces each branch pair to be adjacent");

    bool same = (u1 == u2 && u1p == u2p) || (u1 == u2p && u1p == u2);
    if (same) {
        need(g.vertex_count() == 5 && g.edge_count() == 7,
             "degree-2: coinciding branch pairs but not the 5-vertex terminal graph");
        ColoringResult res = small_case_solve(g);
        res.trace.push_back({{CaseKind::HasDegree2, {v0}, {}}, "terminal H1 form: " + fr.str()});
        return res;
    }
    need(u1 != u2 && u1 != u2p && u1p != u2 && u1p != u2p,
         "degree-2: branch pairs must coincide or be disjoint");

    {
        VertexId anchor = -1;
        for (VertexId u : {u1, u1p, u2, u2p})
            if (g.degree(u) == 2 && (anchor < 0 || u < anchor)) anchor = u;
        if (anchor >= 0) return degree2_anchor(g, anchor, fr, "degree-2 low-degree pair vertex");
    }

    std::vector<std::pair<VertexId, VertexId>> cross;
    for (VertexId a : {u1, u1p})
        for (VertexId b : {u2, u2p})
            if (g.has_edge(a, b)) cross.emplace_back(a, b);
    need(cross.size() <= 2, "degree-2: at most two cross edges are possible");

    if (cross.size() == 2) {
        need(g.vertex_count() == 7 && g.edge_count() == 10,
             "degree-2: double cross edge but not the 7-vertex terminal graph");
        ColoringResult res = small_case_solve(g);
        res.trace.push_back({{CaseKind::HasDegree2, {v0}, {}}, "terminal H2 form: " + fr.str()});
        return res;
    }
    if (cross.size() == 1) {
        auto [a, b] = cross.front();
        if (a == u1p) std::swap(u1, u1p);
        if (b == u2p) std::swap(u2, u2p);
        need(g.has_edge(u1, u2), "degree-2: cross edge lost in relabeling");
        return degree2_case1(g, v0, v1, v2, u1, u1p, u2, u2p);
    }
    return degree2_case2(g, v0, v1, v2, u1, u1p, u2, u2p);
}

// ---------------------------------------------------------------------------
// cut vertex (cubic)

namespace {

ColoringResult extend_cut_vertex_impl(const Graph& g, VertexId v0, int depth) {
    const char* ctx = "cut-vertex";
    need(depth <= 1, "cut-vertex recursion nests too deep");
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        need(g.degree(v) == 3, "cut-vertex case requires a cubic graph");

    const auto& nb = g.neighbors(v0);
    std::vector<std::pair<VertexId, VertexId>> inner;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j)
            if (g.has_edge(nb[i], nb[j])) inner.emplace_back(nb[i], nb[j]);
    need(inner.size() == 1, "cut-vertex: exactly one edge among the neighbors");
    VertexId v1 = inner[0].first, v2 = inner[0].second;
    VertexId u0 = -1;
    for (VertexId w : nb)
        if (w != v1 && w != v2) u0 = w;
    need(u0 >= 0, "cut-vertex: third neighbor");

    // Components of g - v0.
    std::vector<int> comp(static_cast<size_t>(g.vertex_count()), -1);
    int comp_count = 0;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (s == v0 || comp[static_cast<size_t>(s)] >= 0) continue;
        std::vector<VertexId> stack{s};
        comp[static_cast<size_t>(s)] = comp_count;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (w == v0 || comp[static_cast<size_t>(w)] >= 0) continue;
                comp[static_cast<size_t>(w)] = comp_count;
                stack.push_back(w);
            }
        }
        ++comp_count;
    }
    need(comp_count == 2, "cut-vertex: removal must leave exactly two components");
    need(comp[static_cast<size_t>(v1)] == comp[static_cast<size_t>(v2)] &&
             comp[static_cast<size_t>(u0)] != comp[static_cast<size_t>(v1)],
         "cut-vertex: sides are split by the neighbor edge");

    Engine E(g);
    std::vector<EdgeId> side1_host_edges;
    auto color_side = [&](int side_id, std::vector<EdgeId>* host_edges) {
        std::vector<VertexId> verts;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (v != v0 && comp[static_cast<size_t>(v)] == side_id) verts.push_back(v);
        Graph sub = g.induced(verts);
        ColoringResult r = color_component_impl(sub, depth + 1);
        need(!r.exceptional, "cut-vertex: side produced an exceptional coloring");
        for (EdgeId se = 0; se < sub.edge_count(); ++se) {
            EdgeId host = E.eid(verts[static_cast<size_t>(sub.edge(se).u)],
                                verts[static_cast<size_t>(sub.edge(se).v)], ctx);
            E.c.set(host, r.coloring.color(se));
            if (host_edges) host_edges->push_back(host);
        }
    };
    color_side(comp[static_cast<size_t>(u0)], &side1_host_edges);
    color_side(comp[static_cast<size_t>(v1)], nullptr);

    EdgeId e0 = E.eid(v0, u0, ctx), e1 = E.eid(v0, v1, ctx), e2 = E.eid(v0, v2, ctx);
    auto nb_u0 = g.neighbors(u0);
    std::vector<VertexId> xs;
    for (VertexId x : nb_u0)
        if (x != v0) xs.push_back(x);
    need(xs.size() == 2 && g.has_edge(xs[0], xs[1]), "cut-vertex: near side must close a triangle pair");
    VertexId x1 = xs[0], x2 = xs[1];
    EdgeId f1 = E.eid(u0, x1, ctx), f2 = E.eid(u0, x2, ctx), f3 = E.eid(x1, x2, ctx);
    EdgeId h1 = E.eid(v1, v2, ctx);
    VertexId y1 = E.third(v1, v0, v2, ctx), y2 = E.third(v2, v0, v1, ctx);
    EdgeId h2 = E.eid(v1, y1, ctx), h3 = E.eid(v2, y2, ctx);

    auto cset = [&](std::initializer_list<EdgeId> edges) {
        ColorSet s;
        for (EdgeId e : edges) s.add(E.c.color(e));
        return s;
    };
    ColorSet fcol = cset({f1, f2, f3}), hcol = cset({h1, h2, h3});
    need(fcol.count() == 3 && hcol.count() == 3, "cut-vertex: boundary triples must use three colors");
    if (fcol != hcol) {
        // Permute the near side so the boundary triples agree as sets.
        std::vector<int> pi(8);
        auto fv = fcol.to_vector(), hv = hcol.to_vector();
        std::vector<char> taken(8, 0);
        for (size_t i = 0; i < fv.size(); ++i) {
            pi[static_cast<size_t>(fv[i])] = hv[i];
            taken[static_cast<size_t>(hv[i])] = 1;
        }
        std::vector<int> rest_src, rest_dst;
        for (int col = 1; col <= 7; ++col) {
            if (!fcol.contains(col)) rest_src.push_back(col);
            if (!taken[static_cast<size_t>(col)]) rest_dst.push_back(col);
        }
        for (size_t i = 0; i < rest_src.size(); ++i) pi[static_cast<size_t>(rest_src[i])] = rest_dst[i];
        E.c = permute_colors(E.c, side1_host_edges, pi);
    }
    need(cset({f1, f2, f3}) == cset({h1, h2, h3}), "cut-vertex: boundary triples must agree");

    ColorSet A0 = E.avail(e0), Aa = E.avail(e1), Ab = E.avail(e2);
    need(A0.count() == 2, "cut-vertex: center edge must have exactly two colors");
    need(Aa.count() >= 2 && Ab.count() >= 2, "cut-vertex: side edges must have two colors");

    LemmaFrame fr;
    fr.v("v0", v0);
    fr.v("u0", u0);
    fr.v("v1", v1);
    fr.v("v2", v2);
    if (A0 == Aa && A0 == Ab) {
        // Swap one far color into play on the near side.
        VertexId t1 = E.third(x1, u0, x2, ctx), t2 = E.third(x2, u0, x1, ctx);
        EdgeId far1 = E.eid(x1, t1, ctx), far2 = E.eid(x2, t2, ctx);
        EdgeId f4 = std::min(far1, far2);
        int beta = E.c.color(f4);
        int alpha1 = A0.min();
        need(!A0.contains(beta), "cut-vertex: far color must be blocked at the center edge");
        std::vector<int> swap_map(8);
        for (int col = 1; col <= 7; ++col) swap_map[static_cast<size_t>(col)] = col;
        swap_map[static_cast<size_t>(alpha1)] = beta;
        swap_map[static_cast<size_t>(beta)] = alpha1;
        E.c = permute_colors(E.c, side1_host_edges, swap_map);
        fr.col("alpha1", alpha1);
        fr.col("beta", beta);
        ColorSet A0n = E.avail(e0);
        need(A0n == ((A0 - ColorSet::of({alpha1})) | ColorSet::of({beta})),
             "cut-vertex: swap must free the far color at the center edge");
        need(E.avail(e1) == Aa && E.avail(e2) == Ab, "cut-vertex: swap must not disturb the side edges");
        need((E.avail(e0) | E.avail(e1) | E.avail(e2)).count() >= 3,
             "cut-vertex: three colors must be reachable after the swap");
    }
    E.finish_sdr({e0, e1, e2}, ctx);
    return E.finish({CaseKind::CubicCutVertex, {v0}, {}}, fr.str());
}

}  // namespace

ColoringResult extend_cut_vertex(const Graph& g, VertexId v0) { return extend_cut_vertex_impl(g, v0, 0); }

// ---------------------------------------------------------------------------
// chorded 4-cycle

ColoringResult extend_chorded_c4(const Graph& g, const FourCycle& c4) {
    const char* ctx = "chorded-c4";
    need(c4.chord.has_value(), "chorded-c4 handler needs a chord");
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        need(g.degree(v) == 3, "chorded-c4 case requires a cubic graph");

    VertexId v1, v2, v3, v4;
    {
        const Edge& ch = g.edge(*c4.chord);
        auto cyc = c4.cycle;
        auto is_pair = [&](VertexId a, VertexId b) {
            return (ch.u == a && ch.v == b) || (ch.u == b && ch.v == a);
        };
        if (is_pair(cyc[0], cyc[2])) {
            v1 = cyc[0];
            v2 = cyc[1];
            v3 = cyc[2];
            v4 = cyc[3];
        } else {
            need(is_pair(cyc[1], cyc[3]), "chorded-c4: chord must be a diagonal");
            v1 = cyc[1];
            v2 = cyc[2];
            v3 = cyc[3];
            v4 = cyc[0];
        }
    }
    need(!g.has_edge(v2, v4), "chorded-c4: both diagonals would make the component K4");
    Engine E(g);
    VertexId u2 = E.third(v2, v1, v3, ctx), u4 = E.third(v4, v1, v3, ctx);
    need(u2 != u4 && !g.has_edge(u2, u4), "chorded-c4: legs must be distinct and non-adjacent");
    for (VertexId u : {u2, u4})
        need(u != v1 && u != v2 && u != v3 && u != v4, "chorded-c4: leg inside the cycle");

    {
        bool shared = false;
        for (VertexId x : g.neighbors(u2))
            shared |= std::find(g.neighbors(u4).begin(), g.neighbors(u4).end(), x) != g.neighbors(u4).end();
        if (shared) {
            need(g.vertex_count() == 8 && g.edge_count() == 12,
                 "chorded-c4: legs share a neighbor but not the 8-vertex terminal graph");
            ColoringResult res = small_case_solve(g);
            res.trace.push_back(
                {{CaseKind::ChordedC4, {v1, v2, v3, v4}, {*c4.chord}}, "terminal H4 form"});
            return res;
        }
    }

    E.c = greedy_partial(g, {v1, v2, v3, v4});
    EdgeId e1 = E.eid(v1, v2, ctx), e2 = E.eid(v2, v3, ctx), e3 = E.eid(v3, v4, ctx),
           e4 = E.eid(v4, v1, ctx), e5 = *c4.chord;
    EdgeId f1 = E.eid(v2, u2, ctx), f2 = E.eid(v4, u4, ctx);
    E.expect_uncolored({e1, e2, e3, e4, e5, f1, f2}, ctx);
    for (EdgeId e : {e1, e2, e3, e4})
        need(E.avail(e).count() == 5, "chorded-c4: cycle edges must have five colors");
    need(E.avail(e5).count() == 7, "chorded-c4: the chord must be fully free");
    need(E.avail(f1).count() == 2 && E.avail(f2).count() == 2,
         "chorded-c4: leg edges must have two colors");
    need(E.avail(e1) == E.avail(e2) && E.avail(e3) == E.avail(e4),
         "chorded-c4: cycle sides must pair up");

    LemmaFrame fr;
    fr.v("v1", v1);
    fr.v("v2", v2);
    fr.v("v3", v3);
    fr.v("v4", v4);
    fr.v("u2", u2);
    fr.v("u4", u4);

    std::vector<EdgeId> open = {e1, e2, e3, e4, e5, f1, f2};
    if ((E.avail(e1) | E.avail(e3)).count() >= 6) {
        E.finish_sdr(open, ctx);
        return E.finish({CaseKind::ChordedC4, {v1, v2, v3, v4}, {e5}}, "wide: " + fr.str());
    }
    need(E.avail(e1) == E.avail(e3), "chorded-c4: narrow case needs equal cycle availabilities");

    // Rename the palette so the cycle edges see exactly {6,7}; undone at the end.
    std::vector<int> pi(8), inv(8);
    {
        auto lo = E.avail(e1).to_vector();
        auto hi = E.avail(e1).complement(7).to_vector();
        int next = 1;
        for (int col : lo) pi[static_cast<size_t>(col)] = next++;
        for (int col : hi) pi[static_cast<size_t>(col)] = next++;
        for (int col = 1; col <= 7; ++col) inv[static_cast<size_t>(pi[static_cast<size_t>(col)])] = col;
        E.c = permute_colors(E.c, colored_edges(E.c), pi);
    }
    need(E.avail(e1) == ColorSet::of({1, 2, 3, 4, 5}), "chorded-c4: renaming must normalize the cycle");

    auto legs = [&](VertexId u, EdgeId f) {
        std::vector<EdgeId> out;
        for (EdgeId e : g.incident(u))
            if (e != f) out.push_back(e);
        std::sort(out.begin(), out.end());
        need(out.size() == 2, "chorded-c4: leg tip must have two outer edges");
        return out;
    };
    auto g12 = legs(u2, f1), g34 = legs(u4, f2);
    EdgeId g1 = g12[0], g2 = g12[1], g3 = g34[0], g4 = g34[1];
    need(cset_colors(E.c, {g1, g2}) == ColorSet::of({6, 7}) &&
             cset_colors(E.c, {g3, g4}) == ColorSet::of({6, 7}),
         "chorded-c4: outer legs must wear the two blocked colors");
    VertexId a = g.opposite(g1, u2), b = g.opposite(g2, u2);
    EdgeId h1 = E.eid(a, b, ctx);

    int old_g1 = E.c.color(g1), old_g2 = E.c.color(g2);
    E.c.unset(g1);
    E.c.unset(g2);
    ColorSet low1 = E.avail(g1) - ColorSet::of({6, 7});
    ColorSet low2 = E.avail(g2) - ColorSet::of({6, 7});
    if (!low1.empty()) {
        E.put(g1, low1.min(), ctx);
        E.put(g2, old_g2, ctx);
    } else if (!low2.empty()) {
        E.put(g2, low2.min(), ctx);
        E.put(g1, old_g1, ctx);
    } else {
        need(E.avail(g1) == ColorSet::of({6, 7}) && E.avail(g2) == ColorSet::of({6, 7}),
             "chorded-c4: outer legs must be pinned to the blocked colors");
        int old_h1 = E.c.color(h1);
        E.recolor(h1, old_g1, ctx);
        E.put(g1, old_h1, ctx);
        E.put(g2, old_g2, ctx);
    }
    need((E.avail(e1) | E.avail(e3)).count() >= 6, "chorded-c4: recolor must widen the cycle availability");
    E.finish_sdr(open, ctx);
    E.c = permute_colors(E.c, colored_edges(E.c), inv);
    return E.finish({CaseKind::ChordedC4, {v1, v2, v3, v4}, {e5}}, "narrow: " + fr.str());
}

// ---------------------------------------------------------------------------
// induced 4-cycle

ColoringResult extend_induced_c4(const Graph& g, const FourCycle& c4) {
    const char* ctx = "induced-c4";
    need(!c4.chord.has_value(), "induced-c4 handler needs a chordless cycle");
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        need(g.degree(v) == 3, "induced-c4 case requires a cubic graph");

    std::array<VertexId, 4> cyc = c4.cycle;
    Engine E(g);
    auto third_on_cycle = [&](int i) {
        VertexId prev = cyc[static_cast<size_t>((i + 3) % 4)], next = cyc[static_cast<size_t>((i + 1) % 4)];
        return E.third(cyc[static_cast<size_t>(i)], prev, next, ctx);
    };
    std::array<VertexId, 4> t{third_on_cycle(0), third_on_cycle(1), third_on_cycle(2), third_on_cycle(3)};
    // The outer neighbors pair up along one of the two matchings of the cycle.
    if (t[0] != t[1]) {
        need(t[1] == t[2] && t[3] == t[0], "induced-c4: outer neighbors must pair adjacent corners");
        std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
        std::rotate(t.begin(), t.begin() + 1, t.end());
    }
    need(t[0] == t[1] && t[2] == t[3], "induced-c4: outer neighbors must pair adjacent corners");
    VertexId v1 = cyc[0], v2 = cyc[1], v3 = cyc[2], v4 = cyc[3];
    VertexId u1 = t[0], u2 = t[2];
    need(u1 != u2, "induced-c4: the two hats must differ");
    need(!g.has_edge(u1, u2), "induced-c4: adjacent hats would close a 3-prism");
    VertexId w1 = E.third(u1, v1, v2, ctx), w2 = E.third(u2, v3, v4, ctx);
    need(w1 != w2 && !g.has_edge(w1, w2), "induced-c4: hat tails must be separate");

    E.c = greedy_partial(g, {v1, v2, v3, v4});
    EdgeId e1 = E.eid(v1, v2, ctx), e2 = E.eid(v2, v3, ctx), e3 = E.eid(v3, v4, ctx),
           e4 = E.eid(v4, v1, ctx);
    EdgeId f1 = E.eid(v1, u1, ctx), f2 = E.eid(v2, u1, ctx), f3 = E.eid(v3, u2, ctx),
           f4 = E.eid(v4, u2, ctx);
    E.expect_uncolored({e1, e2, e3, e4, f1, f2, f3, f4}, ctx);
    need(E.avail(e1).count() == 6 && E.avail(e3).count() == 6,
         "induced-c4: hat-side cycle edges must have six colors");
    need(E.avail(e2).count() >= 5 && E.avail(e4).count() >= 5,
         "induced-c4: crossing cycle edges must have five colors");
    for (EdgeId f : {f1, f2, f3, f4})
        need(E.avail(f).count() == 4, "induced-c4: hat edges must have four colors");

    LemmaFrame fr;
    fr.v("v1", v1);
    fr.v("v2", v2);
    fr.v("v3", v3);
    fr.v("v4", v4);
    fr.v("u1", u1);
    fr.v("u2", u2);

    ColorSet ac = E.avail(f1) & E.avail(f3);
    need(!ac.empty(), "induced-c4: opposite hat edges must share a color");
    int alpha = ac.min();
    E.put(f1, alpha, ctx);
    E.put(f3, alpha, ctx);
    fr.col("alpha", alpha);
    need(E.avail(f2).count() == 3 && E.avail(f4).count() == 3,
         "induced-c4: remaining hat edges must drop to three colors");

    ColorSet bc = E.avail(f2) & E.avail(f4);
    if (!bc.empty()) {
        int beta = bc.min();
        E.put(f2, beta, ctx);
        E.put(f4, beta, ctx);
        fr.col("beta", beta);
        for (EdgeId e : {e2, e4, e1, e3}) E.put_min(e, ctx);
        return E.finish({CaseKind::InducedC4, {v1, v2, v3, v4}, {}}, "paired: " + fr.str());
    }
    need((E.avail(f2) | E.avail(f4)).count() == 6, "induced-c4: disjoint hat lists must span six colors");
    E.finish_sdr({f2, f4, e1, e2, e3, e4}, ctx);
    return E.finish({CaseKind::InducedC4, {v1, v2, v3, v4}, {}}, "split: " + fr.str());
}

// ---------------------------------------------------------------------------
// minimum induced even cycle (triangle-covered)

namespace {

ColoringResult extend_even_cycle_impl(const Graph& g, int depth) {
    const char* ctx = "even-cycle";
    need(depth <= 1, "even-cycle recursion nests too deep");
    auto tris = triangle_partition(g);
    need(tris.has_value(), "even-cycle case requires a triangle-covered graph");
    std::vector<int> tri_of(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t t = 0; t < tris->size(); ++t)
        for (VertexId v : (*tris)[t]) tri_of[static_cast<size_t>(v)] = static_cast<int>(t);

    std::vector<VertexId> base = min_induced_even_cycle(g);
    int two_p = static_cast<int>(base.size());
    int p = two_p / 2;
    need(two_p >= 6 && two_p % 2 == 0, "even-cycle: cycle must be even of length at least six");

    Engine E(g);

    // 1-indexed role arrays for a candidate labeling.
    std::vector<VertexId> v(static_cast<size_t>(two_p + 1), -1);
    std::vector<VertexId> u(static_cast<size_t>(two_p + 1), -1), w(static_cast<size_t>(two_p + 1), -1);
    auto bind = [&](const std::vector<VertexId>& lab) {
        for (int i = 1; i <= two_p; ++i) v[static_cast<size_t>(i)] = lab[static_cast<size_t>(i - 1)];
        for (int j = 1; j <= p; ++j) {
            VertexId a = v[static_cast<size_t>(2 * j - 1)], b = v[static_cast<size_t>(2 * j)];
            int t = tri_of[static_cast<size_t>(a)];
            need(t == tri_of[static_cast<size_t>(b)], "even-cycle: pair must share a triangle");
            VertexId apex = -1;
            for (VertexId x : (*tris)[static_cast<size_t>(t)])
                if (x != a && x != b) apex = x;
            need(apex >= 0, "even-cycle: triangle apex");
            u[static_cast<size_t>(2 * j)] = apex;
            w[static_cast<size_t>(2 * j)] = E.third(apex, a, b, ctx);
        }
    };
    {
        bool found = false;
        for (int shift = 0; shift < p && !found; ++shift)
            for (int rev = 0; rev < 2 && !found; ++rev) {
                std::vector<VertexId> lab(static_cast<size_t>(two_p));
                for (int i = 0; i < two_p; ++i)
                    lab[static_cast<size_t>(i)] = base[static_cast<size_t>((i + 2 * shift) % two_p)];
                if (rev) std::reverse(lab.begin(), lab.end());
                bind(lab);
                if (!g.has_edge(w[2], w[4])) found = true;
            }
        need(found, "even-cycle: no labeling avoids the w2-w4 edge");
    }
    if (two_p == 6) {
        int ww = 0;
        for (VertexId a : {w[2], w[4], w[6]})
            for (VertexId b : {w[2], w[4], w[6]})
                if (a < b && g.has_edge(a, b)) ++ww;
        need(ww <= 1, "even-cycle: more than one edge among the three tails");
    }
    {
        // Distinctness the structure theorems promise.
        std::vector<VertexId> us, ws;
        for (int j = 1; j <= p; ++j) {
            us.push_back(u[static_cast<size_t>(2 * j)]);
            ws.push_back(w[static_cast<size_t>(2 * j)]);
        }
        std::sort(us.begin(), us.end());
        std::sort(ws.begin(), ws.end());
        need(std::adjacent_find(us.begin(), us.end()) == us.end(), "even-cycle: apexes must be distinct");
        need(std::adjacent_find(ws.begin(), ws.end()) == ws.end(), "even-cycle: tails must be distinct");
        for (size_t i = 0; i < us.size(); ++i)
            for (size_t j = i + 1; j < us.size(); ++j)
                need(!g.has_edge(us[i], us[j]), "even-cycle: apexes must be pairwise non-adjacent");
    }

    auto vat = [&](int i) { return v[static_cast<size_t>(((i - 1) % two_p + two_p) % two_p + 1)]; };
    std::vector<EdgeId> e(static_cast<size_t>(two_p + 1)), f(static_cast<size_t>(two_p + 1)),
        gE(static_cast<size_t>(two_p + 1));
    for (int i = 1; i <= two_p; ++i) {
        e[static_cast<size_t>(i)] = E.eid(vat(i - 1), vat(i), ctx);
        f[static_cast<size_t>(i)] = E.eid(vat(i), u[static_cast<size_t>(2 * ((i + 1) / 2))], ctx);
    }
    for (int j = 1; j <= p; ++j)
        gE[static_cast<size_t>(2 * j)] =
            E.eid(u[static_cast<size_t>(2 * j)], w[static_cast<size_t>(2 * j)], ctx);

    auto tail_edges = [&](int j) {
        std::vector<EdgeId> out;
        for (EdgeId x : g.incident(w[static_cast<size_t>(j)]))
            if (x != gE[static_cast<size_t>(j)]) out.push_back(x);
        std::sort(out.begin(), out.end());
        need(out.size() == 2, "even-cycle: tail vertex must have two other edges");
        return out;
    };
    auto h12 = tail_edges(2), h34 = tail_edges(4);
    EdgeId h1 = h12[0], h2 = h12[1], h3 = h34[0], h4 = h34[1];

    // Kernel: drop the cycle and the first three apexes, tie the first two
    // tails together, color recursively, then pull the coloring back.
    std::vector<char> del(static_cast<size_t>(g.vertex_count()), 0);
    for (int i = 1; i <= two_p; ++i) del[static_cast<size_t>(v[static_cast<size_t>(i)])] = 1;
    for (int j : {2, 4, 6}) del[static_cast<size_t>(u[static_cast<size_t>(j)])] = 1;
    need(!del[static_cast<size_t>(w[2])] && !del[static_cast<size_t>(w[4])] &&
             !del[static_cast<size_t>(w[6])],
         "even-cycle: tails must survive the deletion");
    std::vector<VertexId> kept;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        if (!del[static_cast<size_t>(x)]) kept.push_back(x);
    std::vector<int> kept_index(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < kept.size(); ++i) kept_index[static_cast<size_t>(kept[i])] = static_cast<int>(i);
    std::vector<std::pair<VertexId, VertexId>> sub_edges;
    for (const Edge& ed : g.edges())
        if (!del[static_cast<size_t>(ed.u)] && !del[static_cast<size_t>(ed.v)])
            sub_edges.emplace_back(kept_index[static_cast<size_t>(ed.u)],
                                   kept_index[static_cast<size_t>(ed.v)]);
    sub_edges.emplace_back(kept_index[static_cast<size_t>(w[2])], kept_index[static_cast<size_t>(w[4])]);
    Graph sub = Graph::from_edges(static_cast<int>(kept.size()), std::move(sub_edges));
    need(is_claw_free(sub), "even-cycle: kernel must stay claw-free");
    EdgeId helper = *sub.edge_between(kept_index[static_cast<size_t>(w[2])],
                                      kept_index[static_cast<size_t>(w[4])]);

    PartialColoring subc(sub.edge_count(), 7);
    for (const auto& comp : sub.components()) {
        Graph piece = sub.induced(comp);
        bool low = false;
        for (VertexId x = 0; x < piece.vertex_count(); ++x) low |= (piece.degree(x) < 3);
        need(low, "even-cycle: kernel component without a low-degree vertex");
        ColoringResult rr = color_component_impl(piece, depth + 1);
        need(!rr.exceptional, "even-cycle: kernel component colored exceptionally");
        for (EdgeId se = 0; se < piece.edge_count(); ++se) {
            auto pe = piece.edge(se);
            EdgeId host = *sub.edge_between(comp[static_cast<size_t>(pe.u)], comp[static_cast<size_t>(pe.v)]);
            subc.set(host, rr.coloring.color(se));
        }
    }
    need(subc.total(), "even-cycle: kernel coloring incomplete");

    int alpha = subc.color(helper);
    for (EdgeId se = 0; se < sub.edge_count(); ++se) {
        if (se == helper) continue;
        auto ed = sub.edge(se);
        EdgeId host = E.eid(kept[static_cast<size_t>(ed.u)], kept[static_cast<size_t>(ed.v)], ctx);
        E.c.set(host, subc.color(se));
    }

    // Seed around the first three triangles.
    E.put(gE[2], alpha, ctx);
    E.put(gE[4], alpha, ctx);
    E.put(e[6], alpha, ctx);
    ColorSet Ag6 = E.avail(gE[6]);
    need(Ag6.count() >= 2, "even-cycle: third tail edge must keep two colors");
    int beta = (Ag6 - ColorSet::of({alpha})).min();
    need(beta != 0, "even-cycle: no second seed color");
    int c1 = E.c.color(h1), c2 = E.c.color(h2);
    int c3 = E.c.color(h3), c4 = E.c.color(h4);
    if (c3 == beta) {
        std::swap(h3, h4);
        std::swap(c3, c4);
    }
    {
        ColorSet distinct = ColorSet::of({alpha, c1, c2, c3, c4});
        need(distinct.count() == 5, "even-cycle: seed colors must be distinct");
        need(c3 != beta, "even-cycle: seed color collision");
    }
    E.put(gE[6], beta, ctx);
    E.put(e[5], c3, ctx);
    ColorSet Af5 = E.avail(f[5]);
    int gamma = (Af5 - ColorSet::of({c4})).min();
    need(gamma != 0, "even-cycle: no color for the fifth hat edge");
    E.put(f[5], gamma, ctx);

    need(E.avail(e[2]).count() == 6, "even-cycle: availability of e2 must be six");
    need(E.avail(e[3]).count() == 5, "even-cycle: availability of e3 must be five");
    need(E.avail(e[4]).count() == 4, "even-cycle: availability of e4 must be four");
    need(E.avail(f[4]).count() == 3, "even-cycle: availability of f4 must be three");

    PartialColoring psi = E.c;
    auto apsi = [&](EdgeId x) { return availability(g, psi, x); };
    ColorSet full7 = ColorSet::full(7);
    need(apsi(f[1]) == apsi(f[2]) && apsi(f[1]) == (full7 - ColorSet::of({alpha, c1, c2})),
         "even-cycle: first two hat availabilities are pinned");
    need(apsi(e[2]) == (full7 - ColorSet::of({alpha})), "even-cycle: e2 availability is pinned");
    need(apsi(e[4]) == (apsi(f[4]) | ColorSet::of({c4})), "even-cycle: e4/f4 availability relation");
    need(apsi(f[3]) == (apsi(f[4]) | ColorSet::of({gamma})), "even-cycle: f3/f4 availability relation");
    need(apsi(e[3]) == (apsi(f[4]) | ColorSet::of({c4, gamma})),
         "even-cycle: e3/f4 availability relation");

    LemmaFrame fr;
    fr.col("2p", two_p);
    fr.col("alpha", alpha);
    fr.col("beta", beta);
    fr.col("gamma", gamma);
    fr.col("c3", c3);
    fr.col("c4", c4);

    std::vector<EdgeId> chain{f[6]};
    if (two_p >= 8)
        for (int i = 7; i <= two_p; ++i) {
            chain.push_back(e[static_cast<size_t>(i)]);
            chain.push_back(f[static_cast<size_t>(i)]);
        }
    for (EdgeId x : {e[1], f[1], e[2], f[2], e[3], f[3], f[4]}) chain.push_back(x);
    for (EdgeId x : chain) E.put_min(x, ctx);

    int a1 = E.c.color(e[1]), b1 = E.c.color(f[1]);
    int a2 = E.c.color(e[2]), b2 = E.c.color(f[2]);
    int a3 = E.c.color(e[3]), b3 = E.c.color(f[3]);
    int b4 = E.c.color(f[4]);

    ColorSet last = E.avail(e[4]);
    if (!last.empty()) {
        E.put_min(e[4], ctx);
        return E.finish({CaseKind::TriangleCovered, {}, {}}, "direct close: " + fr.str());
    }
    need((apsi(e[4]) - ColorSet::of({a2, b2, a3, b3, b4})).empty(),
         "even-cycle: blocked closing edge must be blocked by its five neighbors");

    ColorSet front = ColorSet::of({a2, b2, a3});
    if (!front.contains(gamma)) {
        if (b3 != gamma) {
            E.recolor(f[3], gamma, ctx);
            b3 = gamma;
        }
        ColorSet cand = apsi(f[4]) - ColorSet::of({a3, b3, b4});
        need(!cand.empty(), "even-cycle: no spare color for the fourth hat edge");
        need(apsi(e[4]) == ColorSet::of({a2, b2, a3, b4}),
             "even-cycle: closing availability must match the blockers");
        E.recolor(f[4], cand.min(), ctx);
        E.put(e[4], b4, ctx);
        return E.finish({CaseKind::TriangleCovered, {}, {}}, "hat shuffle: " + fr.str());
    }

    need(b3 != gamma, "even-cycle: f3 cannot wear the reserved color here");
    ColorSet Af4 = apsi(f[4]);
    need(Af4.contains(b3) && Af4.contains(b4), "even-cycle: hat colors must sit in the hat availability");

    if (!Af4.contains(a3)) {
        need(a3 == c4 || a3 == gamma, "even-cycle: e3 color outside the hat list must be special");
        ColorSet rest = Af4 - ColorSet::of({b3, b4});
        need(rest.count() == 1, "even-cycle: hat availability must be three colors");
        int alpha_star = rest.min();
        need(apsi(e[4]) == (Af4 | ColorSet::of({c4})), "even-cycle: closing availability relation");
        if (!front.contains(c4)) {
            E.put(e[4], c4, ctx);
        } else if (!front.contains(alpha_star)) {
            E.put(e[4], alpha_star, ctx);
        } else {
            need(front == ColorSet::of({c4, alpha_star, gamma}),
                 "even-cycle: the three blockers must be the three special colors");
            need(alpha_star == a2 || alpha_star == b2, "even-cycle: spare color must sit on e2 or f2");
            E.recolor(f[4], alpha_star, ctx);
            E.put(e[4], b4, ctx);
        }
        return E.finish({CaseKind::TriangleCovered, {}, {}}, "spare swap: " + fr.str());
    }

    // Tight case: the hat availability is exactly {a3, b3, b4}.
    need(Af4 == ColorSet::of({a3, b3, b4}), "even-cycle: tight hat availability");
    need(ColorSet::of({a2, b2}) == ColorSet::of({c4, gamma}),
         "even-cycle: the second pair must wear the special colors");
    E.c.unset(f[3]);
    E.c.unset(f[4]);
    ColorSet Af2 = apsi(f[2]);
    if (Af2.contains(a2)) {
        // Exchange the colors of f1 and e2.
        E.c.unset(f[1]);
        E.c.unset(e[2]);
        E.put(f[1], a2, ctx);
        E.put(e[2], b1, ctx);
        if (a2 == c4) {
            E.put(e[4], c4, ctx);
            E.put_min(f[3], ctx);
            E.put_min(f[4], ctx);
        } else {
            need(a2 == gamma, "even-cycle: exchanged color must be special");
            E.put(f[3], gamma, ctx);
            E.put_min(e[4], ctx);
            E.put_min(f[4], ctx);
        }
        return E.finish({CaseKind::TriangleCovered, {}, {}}, "exchange close: " + fr.str());
    }
    need(a2 == gamma && b2 == c4,
         "even-cycle: the blocked arrangement admits only one color assignment");
    ColorSet cand = Af2 - ColorSet::of({a1, b1, b2});
    need(!cand.empty(), "even-cycle: no replacement color for f2");
    E.c.unset(f[2]);
    E.c.unset(e[3]);
    E.put(f[2], cand.min(), ctx);
    E.put(e[3], c4, ctx);
    E.finish_sdr({e[4], f[3], f[4]}, ctx);
    return E.finish({CaseKind::TriangleCovered, {}, {}}, "rewire close: " + fr.str());
}

}  // namespace

ColoringResult extend_even_cycle(const Graph& g) { return extend_even_cycle_impl(g, 0); }

// ---------------------------------------------------------------------------
// driver

namespace {

ColoringResult dispatch(const Graph& g, const CaseTag& tag, int depth) {
    switch (tag.kind) {
        case CaseKind::NotClawFree:
            throw NotClawFreeError(
                {tag.vertices[0], {tag.vertices[1], tag.vertices[2], tag.vertices[3]}});
        case CaseKind::NotSubcubic:
            throw NotSubcubicError(tag.vertices[0], g.degree(tag.vertices[0]));
        case CaseKind::Prism3:
            throw std::invalid_argument("color_component: the 3-prism has no 7-coloring");
        case CaseKind::K4:
        case CaseKind::K4Delta:
            return small_case_solve(g);
        case CaseKind::HasDegree1:
            return extend_degree1(g, tag.vertices[0]);
        case CaseKind::HasDegree2:
            return extend_degree2(g, tag.vertices[0]);
        case CaseKind::CubicCutVertex:
            return extend_cut_vertex_impl(g, tag.vertices[0], depth);
        case CaseKind::ChordedC4: {
            FourCycle c4;
            std::copy_n(tag.vertices.begin(), 4, c4.cycle.begin());
            c4.chord = tag.edges.at(0);
            return extend_chorded_c4(g, c4);
        }
        case CaseKind::InducedC4: {
            FourCycle c4;
            std::copy_n(tag.vertices.begin(), 4, c4.cycle.begin());
            return extend_induced_c4(g, c4);
        }
        case CaseKind::TriangleCovered:
            return extend_even_cycle_impl(g, depth);
    }
    throw std::logic_error("dispatch: unknown case");
}

ColoringResult color_component_impl(const Graph& g, int depth) {
    if (g.edge_count() == 0) {
        ColoringResult res;
        res.coloring = PartialColoring(0, 7);
        return res;
    }
    CaseTag tag = classify(g);
    ColoringResult res;
    try {
        res = dispatch(g, tag, depth);
    } catch (const GreedyStuck& gs) {
        if (g.edge_count() > 40) throw InvariantViolation(gs.what());
        res = small_case_solve(g);
        res.trace.push_back({tag, std::string("fallback to exact solve after: ") + gs.what()});
    } catch (const InvariantViolation& iv) {
        if (g.edge_count() > 40) throw;
        res = small_case_solve(g);
        res.trace.push_back({tag, std::string("fallback to exact solve after: ") + iv.what()});
    }
    if (res.trace.empty() || res.trace.front().tag.kind != tag.kind)
        res.trace.insert(res.trace.begin(), {tag, ""});
    need(verify_strong(g, res.coloring, true).empty(), "component coloring failed verification");
    need(res.colors_used <= 7, "component coloring used more than seven colors");
    return res;
}

}  // namespace

ColoringResult color_component(const Graph& g) { return color_component_impl(g, 0); }

StrongColoring strong_color(const Graph& g) {
    std::optional<ClawWitness> claw;
    if (!is_claw_free(g, &claw)) throw NotClawFreeError(*claw);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 3) throw NotSubcubicError(v, g.degree(v));

    StrongColoring out;
    for (const auto& comp : g.components()) {
        Graph sub = g.induced(comp);
        ColoringResult r;
        if (sub.edge_count() == 0) {
            r.coloring = PartialColoring(0, 7);
        } else {
            CaseTag tag = classify(sub);
            if (tag.kind == CaseKind::Prism3) {
                // The one exception: all nine edges see each other, so the
                // identity assignment is the forced nine-coloring.
                r.coloring = PartialColoring(9, 9);
                for (EdgeId e = 0; e < 9; ++e) r.coloring.set(e, e + 1);
                r.colors_used = 9;
                r.exceptional = true;
                r.trace.push_back({tag, "forced nine-coloring"});
            } else {
                r = color_component_impl(sub, 0);
            }
        }
        out.exceptional |= r.exceptional;
        out.components.push_back({comp, std::move(r)});
    }

    out.coloring = PartialColoring(g.edge_count(), out.exceptional ? 9 : 7);
    for (const auto& run : out.components) {
        const auto& verts = run.vertices;
        Graph sub = g.induced(verts);
        for (EdgeId se = 0; se < sub.edge_count(); ++se) {
            auto ed = sub.edge(se);
            auto host = g.edge_between(verts[static_cast<size_t>(ed.u)], verts[static_cast<size_t>(ed.v)]);
            out.coloring.set(*host, run.result.coloring.color(se));
        }
    }
    out.colors_used = out.coloring.colors_used();
    need(verify_strong(g, out.coloring, true).empty(), "full coloring failed verification");
    return out;
}

}  // namespace sec
