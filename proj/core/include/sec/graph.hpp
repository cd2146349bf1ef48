#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sec {

using VertexId = int;
using EdgeId = int;

// Largest color any palette may contain.  The main algorithm works with
// colors 1..7; the triangular prism needs all nine.
constexpr int kMaxColor = 9;

/// Subset of the colors {1..kMaxColor}, stored as a bitmask.
class ColorSet {
public:
    ColorSet() = default;

    static ColorSet full(int palette) {
        check_color(palette);
        ColorSet s;
        s.bits_ = static_cast<uint16_t>((1u << palette) - 1u);
        return s;
    }
    static ColorSet of(std::initializer_list<int> colors) {
        ColorSet s;
        for (int c : colors) s.add(c);
        return s;
    }

    void add(int c) { check_color(c); bits_ |= bit(c); }
    void remove(int c) { check_color(c); bits_ &= static_cast<uint16_t>(~bit(c)); }
    bool contains(int c) const { return c >= 1 && c <= kMaxColor && (bits_ & bit(c)); }
    int count() const { return __builtin_popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    // Smallest member, 0 if empty.
    int min() const { return bits_ == 0 ? 0 : __builtin_ctz(bits_) + 1; }

    // Complement relative to an explicit palette [1,k]; never implicit.
    ColorSet complement(int palette) const {
        ColorSet s = full(palette);
        s.bits_ &= static_cast<uint16_t>(~bits_);
        return s;
    }

    friend ColorSet operator&(ColorSet a, ColorSet b) { a.bits_ &= b.bits_; return a; }
    friend ColorSet operator|(ColorSet a, ColorSet b) { a.bits_ |= b.bits_; return a; }
    friend ColorSet operator-(ColorSet a, ColorSet b) { a.bits_ &= static_cast<uint16_t>(~b.bits_); return a; }
    friend bool operator==(ColorSet a, ColorSet b) { return a.bits_ == b.bits_; }
    friend bool operator!=(ColorSet a, ColorSet b) { return a.bits_ != b.bits_; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int c = 1; c <= kMaxColor; ++c)
            if (contains(c)) out.push_back(c);
        return out;
    }
    std::string str() const;

private:
    static uint16_t bit(int c) { return static_cast<uint16_t>(1u << (c - 1)); }
    static void check_color(int c) {
        if (c < 1 || c > kMaxColor)
            throw std::invalid_argument("color out of range [1," + std::to_string(kMaxColor) + "]: " + std::to_string(c));
    }
    uint16_t bits_ = 0;
};

struct Edge {
    VertexId u;  // u < v
    VertexId v;
};

inline bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }

/// Simple undirected graph.  Vertices are 0..n-1; the edge list is sorted
/// lexicographically and EdgeIds index into it, so two builds from the same
/// edge multiset (in any order) agree edge-for-edge.
class Graph {
public:
    Graph() = default;

    // Rejects loops and duplicate edges with std::invalid_argument.
    static Graph from_edges(int n, std::vector<std::pair<VertexId, VertexId>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const {
        check_edge(e);
        return edges_[static_cast<size_t>(e)];
    }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<VertexId>& neighbors(VertexId v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }
    // Incident edge ids, parallel to neighbors(v).
    const std::vector<EdgeId>& incident(VertexId v) const {
        check_vertex(v);
        return inc_[static_cast<size_t>(v)];
    }

    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;

    bool has_edge(VertexId u, VertexId v) const { return edge_between(u, v).has_value(); }
    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

    VertexId opposite(EdgeId e, VertexId v) const {
        const Edge& ed = edge(e);
        if (ed.u == v) return ed.v;
        if (ed.v == v) return ed.u;
        throw std::invalid_argument("vertex not an endpoint of edge");
    }

    bool adjacent_edges(EdgeId e, EdgeId f) const {
        const Edge& a = edge(e);
        const Edge& b = edge(f);
        return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
    }

    bool connected() const;
    // Vertex sets of the connected components, each sorted, ordered by
    // smallest member.  Isolated vertices form their own components.
    std::vector<std::vector<VertexId>> components() const;

    // Induced subgraph on a sorted vertex list; new vertex i is vertices[i].
    Graph induced(const std::vector<VertexId>& vertices) const;

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
    }
    void check_edge(EdgeId e) const {
        if (e < 0 || e >= edge_count()) throw std::invalid_argument("edge id out of range: " + std::to_string(e));
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::vector<EdgeId>> inc_;
};

/// Edge -> optional color in [1, palette].  0 means unassigned.
class PartialColoring {
public:
    PartialColoring() = default;
    explicit PartialColoring(int edge_count, int palette = 7)
        : assign_(static_cast<size_t>(edge_count), 0), palette_(palette) {
        if (palette < 1 || palette > kMaxColor)
            throw std::invalid_argument("palette size out of range");
    }

    int palette_size() const { return palette_; }
    int size() const { return static_cast<int>(assign_.size()); }

    bool has_color(EdgeId e) const { return at(e) != 0; }
    int color(EdgeId e) const { return at(e); }

    void set(EdgeId e, int c) {
        if (c < 1 || c > palette_)
            throw std::invalid_argument("color " + std::to_string(c) + " outside palette [1," +
                                        std::to_string(palette_) + "]");
        slot(e) = c;
    }
    void unset(EdgeId e) { slot(e) = 0; }

    bool total() const {
        for (int c : assign_)
            if (c == 0) return false;
        return true;
    }
    std::vector<EdgeId> uncolored() const {
        std::vector<EdgeId> out;
        for (size_t i = 0; i < assign_.size(); ++i)
            if (assign_[i] == 0) out.push_back(static_cast<EdgeId>(i));
        return out;
    }
    int colors_used() const {
        ColorSet s;
        for (int c : assign_)
            if (c != 0) s.add(c);
        return s.count();
    }

private:
    int at(EdgeId e) const {
        if (e < 0 || e >= size()) throw std::invalid_argument("edge id out of range: " + std::to_string(e));
        return assign_[static_cast<size_t>(e)];
    }
    int& slot(EdgeId e) {
        if (e < 0 || e >= size()) throw std::invalid_argument("edge id out of range: " + std::to_string(e));
        return assign_[static_cast<size_t>(e)];
    }
    std::vector<int> assign_;
    int palette_ = 7;
};

struct Violation {
    enum class Kind { SameColorConflict, Uncolored, ColorOutOfPalette };
    Kind kind;
    EdgeId e = -1;
    EdgeId f = -1;        // second edge for conflicts
    int color_e = 0;
    int color_f = 0;
    std::string str(const Graph& g) const;
};

/// Two distinct edges see each other when they are adjacent or some edge is
/// adjacent to both.
bool sees(const Graph& g, EdgeId e, EdgeId f);

/// All edges that e sees, ascending, without duplicates.
std::vector<EdgeId> seen_edges(const Graph& g, EdgeId e);

/// Colors of colored edges that e sees under c.
ColorSet seen_colors(const Graph& g, const PartialColoring& c, EdgeId e);

/// The conflict graph: one vertex per edge of g, adjacent iff the edges see
/// each other.  Strong colorings of g are exactly proper vertex colorings of
/// this graph.  Quadratic; intended for the exact solver's small inputs.
Graph conflict_graph(const Graph& g);

/// Exhaustive list of violations; empty iff c is a valid strong (partial)
/// coloring of g.  With require_total, unassigned edges are violations too.
/// palette_limit (default: the coloring's own palette) flags colors above it.
std::vector<Violation> verify_strong(const Graph& g, const PartialColoring& c, bool require_total,
                                     int palette_limit = 0);

}  // namespace sec
