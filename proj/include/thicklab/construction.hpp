#ifndef THICKLAB_CONSTRUCTION_HPP
#define THICKLAB_CONSTRUCTION_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "thicklab/graph.hpp"
#include "thicklab/planarity.hpp"

namespace thicklab {

// The four fixed planar graphs on vertex labels 1..8 that drive the
// recursive decomposition of K_8 x P_m.  H1 and I2 have 16 edges; H2 and I1
// have 12 (H2 leaves 3 and 8 isolated, I1 leaves 4 and 7 isolated).  Each of
// {H1, H2} and {I1, I2} partitions the 28 edges of K_8.
enum class GadgetKind { h1, h2, i1, i2 };

inline const char* gadget_name(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::h1: return "h1";
        case GadgetKind::h2: return "h2";
        case GadgetKind::i1: return "i1";
        case GadgetKind::i2: return "i2";
    }
    throw std::invalid_argument("gadget_name: bad kind");
}

// Edge set over labels 1..8.  H1 and H2 are stored literally; I1 and I2 are
// their images under the label swap (3 4)(7 8).
inline EdgeList gadget_edges(GadgetKind kind) {
    static const EdgeList h1 = {{1, 3}, {1, 5}, {1, 8}, {2, 3}, {2, 7}, {2, 8},
                                {3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {4, 6},
                                {4, 8}, {5, 8}, {6, 8}, {7, 8}};
    static const EdgeList h2 = {{1, 2}, {1, 4}, {1, 6}, {1, 7}, {2, 4}, {2, 5},
                                {2, 6}, {4, 5}, {4, 7}, {5, 6}, {5, 7}, {6, 7}};
    auto swapped = [](const EdgeList& src) {
        const auto relabel = [](VertexId v) -> VertexId {
            switch (v) {
                case 3: return 4;
                case 4: return 3;
                case 7: return 8;
                case 8: return 7;
                default: return v;
            }
        };
        EdgeList out;
        out.reserve(src.size());
        for (const Edge& e : src) out.push_back(edge(relabel(e.u), relabel(e.v)));
        sort_edges(out);
        return out;
    };
    switch (kind) {
        case GadgetKind::h1: return h1;
        case GadgetKind::h2: return h2;
        case GadgetKind::i1: return swapped(h2);
        case GadgetKind::i2: return swapped(h1);
    }
    throw std::invalid_argument("gadget_edges: bad kind");
}

// An ordered pair of edge sets over the layer-major vertex encoding of
// K_8 x P_m: vertex (i, j) with i in 1..8, j in 1..m has id (j-1)*8 + (i-1).
struct BiplanarDecomposition {
    int m = 1;
    EdgeList part1;
    EdgeList part2;
};

namespace detail {

inline VertexId k8pm_vertex(int k_index, int layer) {
    return product_vertex_id(ProductVertex{k_index, layer}, 8);
}

// gadget edges placed on one K_8 layer
inline void append_gadget(EdgeList& out, GadgetKind kind, int layer) {
    for (const Edge& e : gadget_edges(kind)) {
        out.push_back(edge(k8pm_vertex(e.u, layer), k8pm_vertex(e.v, layer)));
    }
}

// the inter-layer edge u_i^{layer-1} u_i^{layer}
inline Edge connector(int k_index, int layer) {
    return edge(k8pm_vertex(k_index, layer - 1), k8pm_vertex(k_index, layer));
}

}  // namespace detail

inline Graph k8_path_product(int m) {
    return cartesian_product(complete_graph(8), path_graph(m));
}

// Recursive biplanar decomposition of K_8 x P_m, built layer by layer.
// Layer 1 carries H1/H2.  An even layer j carries I1/I2 and hands the
// connectors to layer j-1 for i in {1,2,3,4} to part 1 and i in {5,6,7,8}
// to part 2; an odd layer j >= 3 carries H1/H2 and splits the connectors
// the other way around.
inline BiplanarDecomposition build_decomposition(int m) {
    if (m < 1) throw std::invalid_argument("build_decomposition: m must be >= 1");
    BiplanarDecomposition d;
    d.m = m;
    detail::append_gadget(d.part1, GadgetKind::h1, 1);
    detail::append_gadget(d.part2, GadgetKind::h2, 1);
    for (int layer = 2; layer <= m; ++layer) {
        const bool even = layer % 2 == 0;
        detail::append_gadget(d.part1, even ? GadgetKind::i1 : GadgetKind::h1, layer);
        detail::append_gadget(d.part2, even ? GadgetKind::i2 : GadgetKind::h2, layer);
        for (int i = 1; i <= 8; ++i) {
            const bool to_part1 = even ? i <= 4 : i >= 5;
            (to_part1 ? d.part1 : d.part2).push_back(detail::connector(i, layer));
        }
    }
    sort_edges(d.part1);
    sort_edges(d.part2);
    return d;
}

struct DecompositionReport {
    bool is_partition = false;
    std::vector<bool> parts_planar;
    EdgeList missing_edges;     // in E(g) but in no part
    EdgeList duplicated_edges;  // in more than one part (or repeated in one)
    EdgeList extra_edges;       // in some part but not in E(g)
    int thickness_upper_witnessed = 0;  // part count iff partition and all planar

    bool all_parts_planar() const {
        for (bool p : parts_planar) {
            if (!p) return false;
        }
        return true;
    }
};

// Checks that the parts partition E(g) exactly and that each part induces a
// planar graph.  Violations land in the report rather than throwing.
inline DecompositionReport verify_decomposition(const Graph& g,
                                                const std::vector<EdgeList>& parts) {
    DecompositionReport report;
    EdgeList all;
    for (const EdgeList& part : parts) {
        for (const Edge& raw : part) {
            const Edge e = edge(raw.u, raw.v);
            if (e.u < 0 || e.v >= g.vertex_count()) {
                throw std::invalid_argument("verify_decomposition: part edge endpoint " +
                                            std::to_string(e.v) + " outside V(g)");
            }
            all.push_back(e);
        }
    }
    sort_edges(all);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
        if (all[i] == all[i + 1] &&
            (report.duplicated_edges.empty() || report.duplicated_edges.back() != all[i])) {
            report.duplicated_edges.push_back(all[i]);
        }
    }
    for (const Edge& e : g.edges()) {
        if (!std::binary_search(all.begin(), all.end(), e)) report.missing_edges.push_back(e);
    }
    for (const Edge& e : all) {
        if (!g.contains(e) && (report.extra_edges.empty() || report.extra_edges.back() != e)) {
            report.extra_edges.push_back(e);
        }
    }
    report.is_partition = report.missing_edges.empty() && report.duplicated_edges.empty() &&
                          report.extra_edges.empty();
    for (const EdgeList& part : parts) {
        EdgeList unique = sorted_edges(part);
        unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
        report.parts_planar.push_back(lr_planar(Graph(g.vertex_count(), std::move(unique))));
    }
    report.thickness_upper_witnessed =
        report.is_partition && report.all_parts_planar() ? static_cast<int>(parts.size()) : 0;
    return report;
}

struct NormalizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rebalances a planar decomposition so that every part has at least two
// edges, by moving single edges between parts.  Each move takes the smallest
// edge of the largest part whose transfer keeps the receiving part planar
// (the donor only shrinks, so it stays planar).  The edge union and the part
// count never change.
inline std::vector<EdgeList> normalize_decomposition(std::vector<EdgeList> parts) {
    if (parts.empty()) throw NormalizationError("normalize_decomposition: no parts");
    VertexId max_id = 0;
    std::size_t total = 0;
    for (const EdgeList& part : parts) {
        total += part.size();
        for (const Edge& e : part) max_id = std::max({max_id, e.u, e.v});
    }
    const int n = max_id + 1;
    if (total < 2 * parts.size()) {
        throw NormalizationError(
            "normalize_decomposition: fewer than 2k edges, no normalization exists");
    }
    for (EdgeList& part : parts) sort_edges(part);
    for (const EdgeList& part : parts) {
        if (!lr_planar(Graph(n, part))) {
            throw NormalizationError("normalize_decomposition: input part is not planar");
        }
    }

    auto deficient = [&parts]() -> int {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].size() < 2) return static_cast<int>(i);
        }
        return -1;
    };
    for (int receiver = deficient(); receiver != -1; receiver = deficient()) {
        // donors from largest to smallest, keeping at least two edges behind
        std::vector<int> donors;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (static_cast<int>(i) != receiver && parts[i].size() >= 3) {
                donors.push_back(static_cast<int>(i));
            }
        }
        std::stable_sort(donors.begin(), donors.end(), [&parts](int a, int b) {
            return parts[static_cast<std::size_t>(a)].size() >
                   parts[static_cast<std::size_t>(b)].size();
        });
        bool moved = false;
        for (int donor : donors) {
            EdgeList& from = parts[static_cast<std::size_t>(donor)];
            EdgeList& to = parts[static_cast<std::size_t>(receiver)];
            for (std::size_t i = 0; i < from.size() && !moved; ++i) {
                EdgeList enlarged = to;
                enlarged.push_back(from[i]);
                if (lr_planar(Graph(n, enlarged))) {
                    to.insert(std::lower_bound(to.begin(), to.end(), from[i]), from[i]);
                    from.erase(from.begin() + static_cast<std::ptrdiff_t>(i));
                    moved = true;
                }
            }
            if (moved) break;
        }
        if (!moved) {
            throw NormalizationError("normalize_decomposition: no planarity-preserving move");
        }
    }
    return parts;
}

}  // namespace thicklab

#endif
