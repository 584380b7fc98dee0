#ifndef THICKLAB_IO_HPP
#define THICKLAB_IO_HPP

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "thicklab/graph.hpp"

namespace thicklab {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// graph6 (McKay's format): printable chars 63..126, 6 bits each.  The vertex
// count is one byte for n <= 62, otherwise '~' followed by three bytes (18
// bits, n <= 258047).  Edge bits cover the upper triangle column by column:
// (0,1), (0,2), (1,2), (0,3), ...
// ---------------------------------------------------------------------------

inline std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 258047) throw FormatError("to_graph6: graph too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 0x3f)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 0x3f)));
        out.push_back(static_cast<char>(63 + (n & 0x3f)));
    }
    const long bits = static_cast<long>(n) * (n - 1) / 2;
    std::string body((bits + 5) / 6, static_cast<char>(63));
    for (const Edge& e : g.edges()) {
        // pair (u, v) with u < v sits at bit position v*(v-1)/2 + u
        const long pos = static_cast<long>(e.v) * (e.v - 1) / 2 + e.u;
        body[pos / 6] += static_cast<char>(1 << (5 - pos % 6));
    }
    return out + body;
}

inline Graph from_graph6(std::string_view s) {
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw FormatError("from_graph6: empty input");
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw FormatError("from_graph6: truncated input");
        const unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw FormatError("from_graph6: invalid character");
        return c - 63;
    };
    long n = next();
    if (n == 63) {
        n = next();
        if (n == 63) throw FormatError("from_graph6: vertex counts >= 2^18 unsupported");
        n = (n << 6) | next();
        n = (n << 6) | next();
    }
    EdgeList edges;
    int buffer = 0;
    int buffered = 0;
    for (VertexId v = 1; v < n; ++v) {
        for (VertexId u = 0; u < v; ++u) {
            if (buffered == 0) {
                buffer = next();
                buffered = 6;
            }
            --buffered;
            if (buffer & (1 << buffered)) edges.push_back({u, v});
        }
    }
    if (pos != s.size()) throw FormatError("from_graph6: trailing data");
    return Graph(static_cast<int>(n), std::move(edges));
}

// ---------------------------------------------------------------------------
// Edge-list text: one "u v" pair per line, decimal ids, sorted.  Blank lines
// and '#' comments are skipped on input.  The vertex count is max id + 1
// unless an explicit count is supplied (isolated tail vertices are otherwise
// not representable).
// ---------------------------------------------------------------------------

inline std::string to_edge_list(const Graph& g) {
    std::string out;
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

inline Graph from_edge_list(std::string_view text, int n_vertices = -1) {
    EdgeList edges;
    VertexId max_id = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long a = 0, b = 0;
        std::string rest;
        if (!(ls >> a >> b) || (ls >> rest) || a < 0 || b < 0) {
            throw FormatError("from_edge_list: bad line " + std::to_string(line_no) +
                              ": " + line);
        }
        edges.push_back(edge(static_cast<VertexId>(a), static_cast<VertexId>(b)));
        max_id = std::max({max_id, static_cast<VertexId>(a), static_cast<VertexId>(b)});
    }
    const int n = n_vertices >= 0 ? n_vertices : max_id + 1;
    return Graph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// DOT export.  A plain graph, or a two-part edge decomposition drawn as the
// union with one color per part; layout is left to graphviz.
// ---------------------------------------------------------------------------

inline std::string to_dot(const Graph& g, std::string_view name = "g") {
    std::string out = "graph " + std::string(name) + " {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out += "  " + std::to_string(v) + ";\n";
    }
    for (const Edge& e : g.edges()) {
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
    }
    out += "}\n";
    return out;
}

inline std::string decomposition_to_dot(int n_vertices, const EdgeList& part1,
                                        const EdgeList& part2,
                                        std::string_view name = "decomposition") {
    std::string out = "graph " + std::string(name) + " {\n";
    for (VertexId v = 0; v < n_vertices; ++v) {
        out += "  " + std::to_string(v) + ";\n";
    }
    auto emit = [&out](const EdgeList& part, std::string_view color) {
        for (const Edge& e : part) {
            out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) +
                   " [color=" + std::string(color) + "];\n";
        }
    };
    emit(part1, "blue");
    emit(part2, "red");
    out += "}\n";
    return out;
}

}  // namespace thicklab

#endif
