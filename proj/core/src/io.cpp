#include "sec/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <tuple>
#include <vector>

namespace sec {

namespace {

std::vector<long long> parse_ints(std::string_view line, size_t lineno) {
    std::vector<long long> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        long long value = 0;
        auto res = std::from_chars(line.data() + i, line.data() + j, value);
        if (res.ec != std::errc{} || res.ptr != line.data() + j)
            throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" +
                                 std::string(line.substr(i, j - i)) + "'",
                             lineno);
        out.push_back(value);
        i = j;
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<size_t> edge_line;
    long long n = -1;
    bool n_fixed = false;
    size_t lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++lineno;
        pos = end + 1;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) {
            if (end == text.size()) break;
            continue;
        }
        if (line[first] == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (!n_fixed && edges.empty() && line[first] == 'n') {
            auto vals = parse_ints(line.substr(first + 1), lineno);
            if (vals.size() != 1 || vals[0] < 0)
                throw ParseError("line " + std::to_string(lineno) + ": malformed header", lineno);
            n = vals[0];
            n_fixed = true;
            if (end == text.size()) break;
            continue;
        }
        auto vals = parse_ints(line, lineno);
        if (vals.size() != 2)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'", lineno);
        long long u = vals[0], v = vals[1];
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(lineno) + ": negative vertex id", lineno);
        if (u == v) throw ParseError("line " + std::to_string(lineno) + ": loop at vertex " + std::to_string(u), lineno);
        if (n_fixed && (u >= n || v >= n))
            throw ParseError("line " + std::to_string(lineno) + ": vertex id exceeds header count", lineno);
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        edge_line.push_back(lineno);
        if (!n_fixed) n = std::max({n, u + 1, v + 1});
        if (end == text.size()) break;
    }
    if (n < 0) n = 0;
    // Report duplicates with the offending line number rather than the
    // generic builder error.
    {
        std::vector<std::tuple<VertexId, VertexId, size_t>> canon;
        canon.reserve(edges.size());
        for (size_t i = 0; i < edges.size(); ++i) {
            auto [a, b] = edges[i];
            if (a > b) std::swap(a, b);
            canon.emplace_back(a, b, edge_line[i]);
        }
        std::sort(canon.begin(), canon.end());
        for (size_t i = 1; i < canon.size(); ++i) {
            if (std::get<0>(canon[i]) == std::get<0>(canon[i - 1]) &&
                std::get<1>(canon[i]) == std::get<1>(canon[i - 1])) {
                size_t where = std::max(std::get<2>(canon[i]), std::get<2>(canon[i - 1]));
                throw ParseError("line " + std::to_string(where) + ": duplicate edge (" +
                                     std::to_string(std::get<0>(canon[i])) + "," +
                                     std::to_string(std::get<1>(canon[i])) + ")",
                                 where);
            }
        }
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) os << e.u << " " << e.v << "\n";
    return os.str();
}

namespace {

constexpr long long kG6SmallMax = 62;
constexpr long long kG6MediumMax = 258047;         // 2^18 - 1
constexpr long long kG6LargeMax = 68719476735LL;   // 2^36 - 1

void g6_check_byte(unsigned char b, size_t offset) {
    if (b < 63 || b > 126)
        throw ParseError("graph6: byte out of range at offset " + std::to_string(offset), offset);
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("graph6: empty input", 0);
    size_t pos = 0;
    long long n = 0;
    auto take = [&]() -> unsigned char {
        if (pos >= line.size()) throw ParseError("graph6: truncated at offset " + std::to_string(pos), pos);
        unsigned char b = static_cast<unsigned char>(line[pos]);
        g6_check_byte(b, pos);
        ++pos;
        return b;
    };
    unsigned char b0 = take();
    if (b0 == 126) {
        unsigned char b1 = take();
        if (b1 == 126) {
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | (take() - 63);
        } else {
            n = b1 - 63;
            for (int i = 0; i < 2; ++i) n = (n << 6) | (take() - 63);
        }
    } else {
        n = b0 - 63;
    }
    if (n > 100000) throw ParseError("graph6: vertex count too large: " + std::to_string(n), 0);

    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(line.size() - pos) != nbytes)
        throw ParseError("graph6: body length mismatch (expected " + std::to_string(nbytes) + " bytes, got " +
                             std::to_string(line.size() - pos) + ") at offset " + std::to_string(pos),
                         pos);

    std::vector<std::pair<VertexId, VertexId>> edges;
    long long bit = 0;
    unsigned char cur = 0;
    for (VertexId v = 1; v < n; ++v) {
        for (VertexId u = 0; u < v; ++u) {
            if (bit % 6 == 0) cur = static_cast<unsigned char>(take() - 63);
            bool set = (cur >> (5 - bit % 6)) & 1;
            if (set) edges.emplace_back(u, v);
            ++bit;
        }
    }
    if (bit % 6 != 0) {
        int pad = static_cast<int>(6 - bit % 6);
        if (cur & ((1u << pad) - 1u))
            throw ParseError("graph6: nonzero padding bits at offset " + std::to_string(pos - 1), pos - 1);
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= kG6SmallMax) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= kG6MediumMax) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else if (n <= kG6LargeMax) {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw std::invalid_argument("graph6: vertex count too large");
    }
    int acc = 0, nb = 0;
    for (VertexId v = 1; v < n; ++v) {
        for (VertexId u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
    return out;
}

PartialColoring parse_coloring(std::string_view text, const Graph& g, int palette) {
    PartialColoring c(g.edge_count(), palette);
    size_t lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++lineno;
        pos = end + 1;
        size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') {
            auto vals = parse_ints(line, lineno);
            EdgeId e = -1;
            long long color = 0;
            if (vals.size() == 2) {
                if (vals[0] < 0 || vals[0] >= g.edge_count())
                    throw ParseError("line " + std::to_string(lineno) + ": edge id out of range", lineno);
                e = static_cast<EdgeId>(vals[0]);
                color = vals[1];
            } else if (vals.size() == 3) {
                if (vals[0] < 0 || vals[0] >= g.vertex_count() || vals[1] < 0 || vals[1] >= g.vertex_count())
                    throw ParseError("line " + std::to_string(lineno) + ": vertex id out of range", lineno);
                auto id = g.edge_between(static_cast<VertexId>(vals[0]), static_cast<VertexId>(vals[1]));
                if (!id)
                    throw ParseError("line " + std::to_string(lineno) + ": no such edge (" +
                                         std::to_string(vals[0]) + "," + std::to_string(vals[1]) + ")",
                                     lineno);
                e = *id;
                color = vals[2];
            } else {
                throw ParseError("line " + std::to_string(lineno) + ": expected 'eid color' or 'u v color'", lineno);
            }
            if (color < 1 || color > palette)
                throw ParseError("line " + std::to_string(lineno) + ": color " + std::to_string(color) +
                                     " outside [1," + std::to_string(palette) + "]",
                                 lineno);
            c.set(e, static_cast<int>(color));
        }
        if (end == text.size()) break;
    }
    return c;
}

std::string write_coloring(const Graph& g, const PartialColoring& c) {
    std::ostringstream os;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!c.has_color(e)) continue;
        const Edge& ed = g.edge(e);
        os << ed.u << " " << ed.v << " " << c.color(e) << "\n";
    }
    return os.str();
}

}  // namespace sec
