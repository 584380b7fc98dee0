#ifndef THICKLAB_EMBEDDING_HPP
#define THICKLAB_EMBEDDING_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thicklab/graph.hpp"

namespace thicklab {

struct EmbeddingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Combinatorial embedding: a rotation system plus placement data for the
// aggregate drawing of a disconnected plane graph.
//
// Components are indexed in increasing order of their smallest vertex.  By
// default every component beyond the first sits in the outer face of the
// aggregate; component_placement[c] = {host_component, host_face_index} nests
// component c inside that face of an earlier component instead (face indices
// refer to the host's local faces in traversal order, see component_faces).
//
// Each component has one walk facing the region it is placed in.  The default
// choice is its longest boundary walk (first in traversal order on ties);
// outer_face_hint[c] overrides it with the first local face whose walk visits
// all the listed vertices.
struct Embedding {
    Graph graph;
    std::vector<std::vector<VertexId>> rotation;  // rotation[v]: cyclic neighbor order
    std::map<int, std::pair<int, int>> component_placement;
    std::map<int, std::vector<VertexId>> outer_face_hint;
};

// One closed boundary walk: anchor -> path[0] -> ... -> path.back() == anchor.
// An isolated vertex contributes a walk of length 0 (empty path).
struct BoundaryWalk {
    VertexId anchor = 0;
    std::vector<VertexId> path;
    int length() const { return static_cast<int>(path.size()); }
};

// A face of the aggregate plane graph.  A 2-cell face has exactly one
// boundary walk; the face a component is placed into picks up that
// component's outward walk as an extra boundary.
struct Face {
    std::vector<BoundaryWalk> walks;
    int total_length() const {
        int sum = 0;
        for (const BoundaryWalk& w : walks) sum += w.length();
        return sum;
    }
    bool visits(VertexId v) const {
        for (const BoundaryWalk& w : walks) {
            if (w.anchor == v) return true;
            for (VertexId x : w.path) {
                if (x == v) return true;
            }
        }
        return false;
    }
};

namespace detail {

inline std::vector<int> component_labels(const Graph& g, int& count) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    count = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        const int c = count++;
        comp[static_cast<std::size_t>(s)] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = c;
                    stack.push_back(w);
                }
            }
        }
    }
    return comp;
}

}  // namespace detail

// Local (per-component) faces of the rotation system, before any placement
// merging.  Walk orbits are traced with the rule: after arriving at v along
// u->v, leave along the successor of u in the rotation at v.  Faces are
// listed component by component, in dart traversal order; isolated vertices
// yield a single face with one length-0 walk.  Throws EmbeddingError if the
// rotation does not match the adjacency lists or some component violates
// Euler's formula (i.e. the rotation is not planar).
inline std::vector<std::vector<Face>> component_faces(const Embedding& emb,
                                                      std::vector<int>* labels_out = nullptr,
                                                      int* count_out = nullptr) {
    const Graph& g = emb.graph;
    const int n = g.vertex_count();
    if (static_cast<int>(emb.rotation.size()) != n) {
        throw EmbeddingError("embedding: rotation size does not match vertex count");
    }
    for (VertexId v = 0; v < n; ++v) {
        std::vector<VertexId> rot = emb.rotation[static_cast<std::size_t>(v)];
        std::sort(rot.begin(), rot.end());
        if (rot != g.neighbors(v)) {
            throw EmbeddingError("embedding: rotation at vertex " + std::to_string(v) +
                                 " is not a permutation of its neighbors");
        }
    }

    int comp_count = 0;
    std::vector<int> comp = detail::component_labels(g, comp_count);

    // position of u within rotation[v], for O(1) successor lookup
    std::vector<std::map<VertexId, int>> pos(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) {
        const auto& rot = emb.rotation[static_cast<std::size_t>(v)];
        for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
            pos[static_cast<std::size_t>(v)][rot[static_cast<std::size_t>(i)]] = i;
        }
    }

    // darts: 2k = u->v, 2k+1 = v->u for edge k = (u, v)
    const EdgeList& edges = g.edges();
    const int n_darts = 2 * static_cast<int>(edges.size());
    auto dart_source = [&](int d) { return d % 2 == 0 ? edges[static_cast<std::size_t>(d / 2)].u
                                                      : edges[static_cast<std::size_t>(d / 2)].v; };
    auto dart_target = [&](int d) { return d % 2 == 0 ? edges[static_cast<std::size_t>(d / 2)].v
                                                      : edges[static_cast<std::size_t>(d / 2)].u; };
    std::map<std::pair<VertexId, VertexId>, int> dart_id;
    for (int d = 0; d < n_darts; ++d) dart_id[{dart_source(d), dart_target(d)}] = d;

    std::vector<std::vector<Face>> local(static_cast<std::size_t>(comp_count));
    std::vector<bool> seen(static_cast<std::size_t>(n_darts), false);
    for (int d0 = 0; d0 < n_darts; ++d0) {
        if (seen[static_cast<std::size_t>(d0)]) continue;
        BoundaryWalk walk;
        walk.anchor = dart_source(d0);
        int d = d0;
        do {
            seen[static_cast<std::size_t>(d)] = true;
            const VertexId u = dart_source(d);
            const VertexId v = dart_target(d);
            walk.path.push_back(v);
            const auto& rot = emb.rotation[static_cast<std::size_t>(v)];
            const int next_i = (pos[static_cast<std::size_t>(v)][u] + 1) %
                               static_cast<int>(rot.size());
            d = dart_id[{v, rot[static_cast<std::size_t>(next_i)]}];
        } while (d != d0);
        Face f;
        f.walks.push_back(std::move(walk));
        local[static_cast<std::size_t>(comp[static_cast<std::size_t>(f.walks[0].anchor)])]
            .push_back(std::move(f));
    }
    for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) == 0) {
            Face f;
            f.walks.push_back(BoundaryWalk{v, {}});
            local[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])]
                .push_back(std::move(f));
        }
    }

    // Euler check per component: v - e + f = 2
    std::vector<int> comp_v(static_cast<std::size_t>(comp_count), 0);
    std::vector<int> comp_e(static_cast<std::size_t>(comp_count), 0);
    for (VertexId v = 0; v < n; ++v) ++comp_v[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
    for (const Edge& e : edges) ++comp_e[static_cast<std::size_t>(comp[static_cast<std::size_t>(e.u)])];
    for (int c = 0; c < comp_count; ++c) {
        const long lhs = comp_v[static_cast<std::size_t>(c)] - comp_e[static_cast<std::size_t>(c)] +
                         static_cast<long>(local[static_cast<std::size_t>(c)].size());
        if (lhs != 2) {
            throw EmbeddingError("embedding: component " + std::to_string(c) +
                                 " violates Euler's formula (rotation is not planar)");
        }
    }

    if (labels_out != nullptr) *labels_out = std::move(comp);
    if (count_out != nullptr) *count_out = comp_count;
    return local;
}

// Faces of the aggregate plane graph: each component's outward walk merges
// into the face the component is placed in, so for k components
// |V| - |E| + |F| = 1 + k.
inline std::vector<Face> faces(const Embedding& emb) {
    std::vector<int> comp;
    int comp_count = 0;
    std::vector<std::vector<Face>> local = component_faces(emb, &comp, &comp_count);

    // pick the outward-facing walk of every component
    std::vector<int> outer(static_cast<std::size_t>(comp_count), 0);
    for (int c = 0; c < comp_count; ++c) {
        const auto& fs = local[static_cast<std::size_t>(c)];
        const auto hint = emb.outer_face_hint.find(c);
        if (hint != emb.outer_face_hint.end()) {
            int found = -1;
            for (int i = 0; i < static_cast<int>(fs.size()) && found < 0; ++i) {
                bool all = true;
                for (VertexId v : hint->second) {
                    all = all && fs[static_cast<std::size_t>(i)].visits(v);
                }
                if (all) found = i;
            }
            if (found < 0) {
                throw EmbeddingError("embedding: no face of component " + std::to_string(c) +
                                     " matches its outer_face_hint");
            }
            outer[static_cast<std::size_t>(c)] = found;
        } else {
            int best = 0;
            for (int i = 1; i < static_cast<int>(fs.size()); ++i) {
                if (fs[static_cast<std::size_t>(i)].total_length() >
                    fs[static_cast<std::size_t>(best)].total_length()) {
                    best = i;
                }
            }
            outer[static_cast<std::size_t>(c)] = best;
        }
    }

    // aggregate_index[c][i]: position in the result of local face i of
    // component c, or -1 for the outward walk (merged elsewhere).
    std::vector<std::vector<int>> aggregate_index(static_cast<std::size_t>(comp_count));
    std::vector<Face> result;
    int outer_face_index = -1;
    for (int c = 0; c < comp_count; ++c) {
        auto& fs = local[static_cast<std::size_t>(c)];
        auto& index = aggregate_index[static_cast<std::size_t>(c)];
        index.assign(fs.size(), -1);
        // target face that receives this component's outward walk
        int target;
        if (c == 0) {
            target = -2;  // becomes the aggregate outer face itself
        } else {
            const auto placed = emb.component_placement.find(c);
            if (placed == emb.component_placement.end()) {
                target = outer_face_index;
            } else {
                const auto [host, face_i] = placed->second;
                if (host < 0 || host >= c ||
                    face_i < 0 ||
                    face_i >= static_cast<int>(aggregate_index[static_cast<std::size_t>(host)].size())) {
                    throw EmbeddingError("embedding: invalid component_placement for component " +
                                         std::to_string(c));
                }
                // the host's outward-walk entry already resolves to the region
                // the host itself was placed in
                target = aggregate_index[static_cast<std::size_t>(host)][static_cast<std::size_t>(face_i)];
            }
        }
        for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
            if (i == outer[static_cast<std::size_t>(c)]) {
                if (target == -2) {
                    index[static_cast<std::size_t>(i)] = static_cast<int>(result.size());
                    outer_face_index = static_cast<int>(result.size());
                    result.push_back(std::move(fs[static_cast<std::size_t>(i)]));
                } else {
                    index[static_cast<std::size_t>(i)] = target;
                    for (BoundaryWalk& w : fs[static_cast<std::size_t>(i)].walks) {
                        result[static_cast<std::size_t>(target)].walks.push_back(std::move(w));
                    }
                }
            } else {
                index[static_cast<std::size_t>(i)] = static_cast<int>(result.size());
                result.push_back(std::move(fs[static_cast<std::size_t>(i)]));
            }
        }
    }
    return result;
}

}  // namespace thicklab

#endif
