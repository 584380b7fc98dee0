#ifndef THICKLAB_GRAPH_HPP
#define THICKLAB_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thicklab {

using VertexId = int;

// Undirected edge, always stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge edge(VertexId a, VertexId b) {
    if (a == b) {
        throw std::invalid_argument("edge: loop at vertex " + std::to_string(a));
    }
    if (a > b) std::swap(a, b);
    return Edge{a, b};
}

using EdgeList = std::vector<Edge>;

inline void sort_edges(EdgeList& edges) { std::sort(edges.begin(), edges.end()); }

inline EdgeList sorted_edges(EdgeList edges) {
    sort_edges(edges);
    return edges;
}

// Simple undirected graph on vertices 0..n-1 with sorted edge and adjacency
// lists.  Immutable after construction.
class Graph {
public:
    Graph() = default;

    Graph(int n_vertices, EdgeList edges) : n_(n_vertices), edges_(std::move(edges)) {
        if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
        for (Edge& e : edges_) e = edge(e.u, e.v);
        sort_edges(edges_);
        adj_.assign(static_cast<std::size_t>(n_), {});
        const Edge* prev = nullptr;
        for (const Edge& e : edges_) {
            if (e.u < 0 || e.v >= n_) {
                throw std::invalid_argument("Graph: edge endpoint out of range");
            }
            if (prev != nullptr && *prev == e) {
                throw std::invalid_argument("Graph: duplicate edge");
            }
            prev = &e;
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const EdgeList& edges() const { return edges_; }

    const std::vector<VertexId>& neighbors(VertexId v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(VertexId a, VertexId b) const {
        if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
        const auto& nbrs = neighbors(a);
        return std::binary_search(nbrs.begin(), nbrs.end(), b);
    }
    bool contains(const Edge& e) const { return has_edge(e.u, e.v); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    EdgeList edges_;
    std::vector<std::vector<VertexId>> adj_;
};

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    EdgeList edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return Graph(n, std::move(edges));
}

inline Graph path_graph(int m) {
    if (m < 1) throw std::invalid_argument("path_graph: m must be >= 1");
    EdgeList edges;
    edges.reserve(static_cast<std::size_t>(m) - 1);
    for (VertexId v = 0; v + 1 < m; ++v) edges.push_back({v, v + 1});
    return Graph(m, std::move(edges));
}

// Vertex (a, b) of g x h maps to id b * |V(g)| + a, so ids are sorted by the
// h-coordinate first.  For K_n x P_m this is the layer-major encoding
// id = (layer-1)*n + (k_index-1).
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    if (ng == 0 || nh == 0) {
        throw std::invalid_argument("cartesian_product: empty factor graph");
    }
    EdgeList edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()) * nh +
                  static_cast<std::size_t>(h.edge_count()) * ng);
    for (VertexId b = 0; b < nh; ++b) {
        for (const Edge& e : g.edges()) edges.push_back({b * ng + e.u, b * ng + e.v});
    }
    for (const Edge& e : h.edges()) {
        for (VertexId a = 0; a < ng; ++a) edges.push_back({e.u * ng + a, e.v * ng + a});
    }
    return Graph(ng * nh, std::move(edges));
}

// 1-based coordinates of a K_n x P_m vertex: k_index in 1..n, layer in 1..m.
struct ProductVertex {
    int k_index = 1;
    int layer = 1;
    friend constexpr auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

inline VertexId product_vertex_id(const ProductVertex& pv, int n) {
    if (n < 1 || pv.k_index < 1 || pv.k_index > n || pv.layer < 1) {
        throw std::invalid_argument("product_vertex_id: coordinates out of range");
    }
    return (pv.layer - 1) * n + (pv.k_index - 1);
}

inline ProductVertex product_vertex_at(VertexId id, int n) {
    if (n < 1 || id < 0) throw std::invalid_argument("product_vertex_at: bad arguments");
    return ProductVertex{id % n + 1, id / n + 1};
}

}  // namespace thicklab

#endif
