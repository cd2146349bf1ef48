#include "sec/graph.hpp"

#include <algorithm>
#include <sstream>

namespace sec {

std::string ColorSet::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int c = 1; c <= kMaxColor; ++c) {
        if (!contains(c)) continue;
        if (!first) os << ',';
        os << c;
        first = false;
    }
    os << '}';
    return os.str();
}

Graph Graph::from_edges(int n, std::vector<std::pair<VertexId, VertexId>> edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + "," +
                                    std::to_string(dup->second) + ")");

    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    g.adj_.assign(static_cast<size_t>(n), {});
    g.inc_.assign(static_cast<size_t>(n), {});
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        g.edges_.push_back({u, v});
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.inc_[static_cast<size_t>(u)].push_back(static_cast<EdgeId>(i));
        g.adj_[static_cast<size_t>(v)].push_back(u);
        g.inc_[static_cast<size_t>(v)].push_back(static_cast<EdgeId>(i));
    }
    // Lexicographic edge order already leaves adj_[u] sorted for the u-side
    // entries but not when v-side entries interleave; sort both in lockstep.
    for (VertexId v = 0; v < n; ++v) {
        auto& a = g.adj_[static_cast<size_t>(v)];
        auto& e = g.inc_[static_cast<size_t>(v)];
        std::vector<size_t> p(a.size());
        for (size_t i = 0; i < p.size(); ++i) p[i] = i;
        std::sort(p.begin(), p.end(), [&](size_t i, size_t j) { return a[i] < a[j]; });
        std::vector<VertexId> a2(a.size());
        std::vector<EdgeId> e2(e.size());
        for (size_t i = 0; i < p.size(); ++i) {
            a2[i] = a[p[i]];
            e2[i] = e[p[i]];
        }
        a = std::move(a2);
        e = std::move(e2);
    }
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max<int>(d, static_cast<int>(a.size()));
    return d;
}

std::optional<EdgeId> Graph::edge_between(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (degree(u) > degree(v)) std::swap(u, v);
    const auto& a = adj_[static_cast<size_t>(u)];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) return std::nullopt;
    return inc_[static_cast<size_t>(u)][static_cast<size_t>(it - a.begin())];
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adj_[static_cast<size_t>(v)]) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

std::vector<std::vector<VertexId>> Graph::components() const {
    std::vector<int> comp(static_cast<size_t>(n_), -1);
    std::vector<std::vector<VertexId>> out;
    for (VertexId s = 0; s < n_; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<VertexId> stack{s};
        comp[static_cast<size_t>(s)] = id;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            out[static_cast<size_t>(id)].push_back(v);
            for (VertexId w : adj_[static_cast<size_t>(v)]) {
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

Graph Graph::induced(const std::vector<VertexId>& vertices) const {
    std::vector<int> index(static_cast<size_t>(n_), -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        if (i > 0 && vertices[i] <= vertices[i - 1])
            throw std::invalid_argument("induced: vertex list must be sorted and unique");
        index[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
    }
    std::vector<std::pair<VertexId, VertexId>> sub;
    for (const Edge& e : edges_) {
        int iu = index[static_cast<size_t>(e.u)];
        int iv = index[static_cast<size_t>(e.v)];
        if (iu >= 0 && iv >= 0) sub.emplace_back(iu, iv);
    }
    return from_edges(static_cast<int>(vertices.size()), std::move(sub));
}

std::string Violation::str(const Graph& g) const {
    std::ostringstream os;
    auto name = [&](EdgeId id) {
        const Edge& ed = g.edge(id);
        os << "e" << id << "=(" << ed.u << "," << ed.v << ")";
    };
    switch (kind) {
        case Kind::SameColorConflict:
            os << "conflict: ";
            name(e);
            os << " and ";
            name(f);
            os << " both have color " << color_e;
            break;
        case Kind::Uncolored:
            os << "uncolored: ";
            name(e);
            break;
        case Kind::ColorOutOfPalette:
            os << "out of palette: ";
            name(e);
            os << " has color " << color_e;
            break;
    }
    return os.str();
}

bool sees(const Graph& g, EdgeId e, EdgeId f) {
    if (e == f) throw std::invalid_argument("sees: edges must be distinct");
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(f);
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return true;
    // Distance two: an edge joins an endpoint of e to an endpoint of f.
    return g.has_edge(a.u, b.u) || g.has_edge(a.u, b.v) || g.has_edge(a.v, b.u) || g.has_edge(a.v, b.v);
}

std::vector<EdgeId> seen_edges(const Graph& g, EdgeId e) {
    const Edge& ed = g.edge(e);
    std::vector<EdgeId> out;
    auto push_around = [&](VertexId v) {
        for (EdgeId f : g.incident(v))
            if (f != e) out.push_back(f);
    };
    push_around(ed.u);
    push_around(ed.v);
    for (VertexId x : {ed.u, ed.v}) {
        for (VertexId y : g.neighbors(x)) {
            if (y == ed.u || y == ed.v) continue;
            push_around(y);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ColorSet seen_colors(const Graph& g, const PartialColoring& c, EdgeId e) {
    ColorSet s;
    for (EdgeId f : seen_edges(g, e))
        if (c.has_color(f)) s.add(c.color(f));
    return s;
}

Graph conflict_graph(const Graph& g) {
    int m = g.edge_count();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f : seen_edges(g, e))
            if (f > e) edges.emplace_back(e, f);
    return Graph::from_edges(m, std::move(edges));
}

std::vector<Violation> verify_strong(const Graph& g, const PartialColoring& c, bool require_total,
                                     int palette_limit) {
    if (c.size() != g.edge_count())
        throw std::invalid_argument("coloring defined over a different edge count");
    if (palette_limit <= 0) palette_limit = c.palette_size();
    std::vector<Violation> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!c.has_color(e)) {
            if (require_total) out.push_back({Violation::Kind::Uncolored, e, -1, 0, 0});
            continue;
        }
        if (c.color(e) > palette_limit)
            out.push_back({Violation::Kind::ColorOutOfPalette, e, -1, c.color(e), 0});
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!c.has_color(e)) continue;
        for (EdgeId f : seen_edges(g, e)) {
            if (f <= e || !c.has_color(f)) continue;
            if (c.color(e) == c.color(f))
                out.push_back({Violation::Kind::SameColorConflict, e, f, c.color(e), c.color(f)});
        }
    }
    return out;
}

}  // namespace sec
