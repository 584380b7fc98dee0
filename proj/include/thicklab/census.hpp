#ifndef THICKLAB_CENSUS_HPP
#define THICKLAB_CENSUS_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "thicklab/embedding.hpp"
#include "thicklab/graph.hpp"

namespace thicklab {

// Raised when a census precondition fails because some part has fewer than
// two edges; normalize the decomposition first.
struct CensusPreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Face statistics of the fixed embeddings of a planar decomposition of
// K_n x P_2.  F is the union of the parts' face sets; F_P are the faces whose
// boundary walks use at least one inter-layer (path) edge.
struct FaceCensus {
    int n = 0;            // one layer's vertex count, deduced from |path_edges|
    int total_faces = 0;  // |F|
    int path_faces = 0;   // |F_P|
    std::vector<int> face_lengths;

    bool total_faces_within_bound = false;  // |F| <= floor((2n^2 - n) / 3)
    bool path_faces_within_bound = false;   // |F_P| <= n
    bool min_face_length_ok = false;        // every face length >= 3
    bool path_face_length_ok = false;       // every F_P face length >= 4

    bool all_ok() const {
        return total_faces_within_bound && path_faces_within_bound && min_face_length_ok &&
               path_face_length_ok;
    }
};

inline FaceCensus face_census(const std::vector<Embedding>& parts, const EdgeList& path_edges) {
    if (parts.empty()) throw std::invalid_argument("face_census: no parts");
    for (const Embedding& part : parts) {
        if (part.graph.edge_count() < 2) {
            throw CensusPreconditionError(
                "face_census: a part has fewer than two edges; apply normalization first");
        }
    }
    EdgeList path = sorted_edges(path_edges);
    const auto uses_path_edge = [&path](const Face& f) {
        for (const BoundaryWalk& w : f.walks) {
            VertexId prev = w.anchor;
            for (VertexId v : w.path) {
                if (std::binary_search(path.begin(), path.end(), edge(prev, v))) return true;
                prev = v;
            }
        }
        return false;
    };

    FaceCensus census;
    census.n = static_cast<int>(path.size());
    bool min_len_ok = true;
    bool path_len_ok = true;
    for (const Embedding& part : parts) {
        for (const Face& f : faces(part)) {
            const int len = f.total_length();
            census.face_lengths.push_back(len);
            ++census.total_faces;
            min_len_ok = min_len_ok && len >= 3;
            if (uses_path_edge(f)) {
                ++census.path_faces;
                path_len_ok = path_len_ok && len >= 4;
            }
        }
    }
    const int n = census.n;
    census.total_faces_within_bound = census.total_faces <= (2 * n * n - n) / 3;
    census.path_faces_within_bound = census.path_faces <= n;
    census.min_face_length_ok = min_len_ok;
    census.path_face_length_ok = path_len_ok;
    return census;
}

}  // namespace thicklab

#endif
