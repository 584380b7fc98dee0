// Test-only oracles, deliberately independent of the library's planarity
// machinery: planarity on <= 6 vertices decided by exhaustive Kuratowski
// subdivision search, thickness by brute force over all 2-colorings.
#ifndef THICKLAB_TESTS_NAIVE_ORACLES_HPP
#define THICKLAB_TESTS_NAIVE_ORACLES_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "thicklab/graph.hpp"

namespace thicklab::testing {

// A graph on at most 6 vertices is nonplanar iff it contains K5 on five of
// its vertices, K3,3 on six, or K5 with one subdivided edge on six (no other
// Kuratowski subdivision fits in 6 vertices).
inline bool naive_planar(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 6) throw std::invalid_argument("naive_planar: only valid for n <= 6");
    if (n <= 4) return true;

    std::vector<VertexId> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;

    // K5 on any 5 vertices
    for (int skip = 0; skip < (n == 5 ? 1 : n); ++skip) {
        bool complete = true;
        for (int a = 0; a < n && complete; ++a) {
            if (n == 6 && a == skip) continue;
            for (int b = a + 1; b < n && complete; ++b) {
                if (n == 6 && b == skip) continue;
                complete = g.has_edge(a, b);
            }
        }
        if (complete) return false;
    }
    if (n < 6) return true;

    // K3,3 across any 3|3 bipartition
    for (int a = 0; a < 6; ++a) {
        for (int b = a + 1; b < 6; ++b) {
            for (int c = b + 1; c < 6; ++c) {
                bool complete = true;
                for (int x : {a, b, c}) {
                    for (int y = 0; y < 6 && complete; ++y) {
                        if (y == a || y == b || y == c) continue;
                        complete = g.has_edge(x, y);
                    }
                }
                if (complete) return false;
            }
        }
    }

    // K5 with one subdivided edge: x of degree 2 joins branch vertices p, q;
    // all other branch pairs are direct edges
    for (int x = 0; x < 6; ++x) {
        std::vector<int> branch;
        for (int v = 0; v < 6; ++v) {
            if (v != x) branch.push_back(v);
        }
        for (std::size_t i = 0; i < branch.size(); ++i) {
            for (std::size_t j = i + 1; j < branch.size(); ++j) {
                const int p = branch[i];
                const int q = branch[j];
                if (!g.has_edge(x, p) || !g.has_edge(x, q)) continue;
                bool rest = true;
                for (std::size_t a = 0; a < branch.size() && rest; ++a) {
                    for (std::size_t b = a + 1; b < branch.size() && rest; ++b) {
                        if (a == i && b == j) continue;
                        rest = g.has_edge(branch[a], branch[b]);
                    }
                }
                if (rest) return false;
            }
        }
    }
    return true;
}

// Brute-force thickness for graphs on <= 6 vertices: try every 2-coloring of
// the edges (edge 0 pinned to part 0) before giving up and answering 3.
inline int naive_thickness(const Graph& g) {
    if (naive_planar(g)) return 1;
    const int m = g.edge_count();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (m - 1)); ++mask) {
        EdgeList part0{g.edges()[0]};
        EdgeList part1;
        for (int i = 1; i < m; ++i) {
            (mask & (std::uint32_t{1} << (i - 1)) ? part1 : part0)
                .push_back(g.edges()[static_cast<std::size_t>(i)]);
        }
        if (naive_planar(Graph(g.vertex_count(), part0)) &&
            naive_planar(Graph(g.vertex_count(), part1))) {
            return 2;
        }
    }
    return 3;
}

// xorshift64*; fixed seeds keep every test reproducible
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545f4914f6cdd1dULL;
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
    bool chance(int num, int den) { return below(den) < num; }
};

inline Graph random_graph(Rng& rng, int n, int percent) {
    EdgeList edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (rng.chance(percent, 100)) edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace thicklab::testing

#endif
