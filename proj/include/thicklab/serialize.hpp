#ifndef THICKLAB_SERIALIZE_HPP
#define THICKLAB_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "thicklab/bounds.hpp"
#include "thicklab/io.hpp"
#include "thicklab/census.hpp"
#include "thicklab/construction.hpp"
#include "thicklab/embedding.hpp"
#include "thicklab/graph.hpp"
#include "thicklab/planarity.hpp"
#include "thicklab/solver.hpp"

namespace thicklab {

using json = nlohmann::ordered_json;

inline json edges_to_json(const EdgeList& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back(json::array({e.u, e.v}));
    return arr;
}

inline EdgeList edges_from_json(const json& arr) {
    if (!arr.is_array()) throw FormatError("edges: expected an array");
    EdgeList edges;
    for (const json& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer()) {
            throw FormatError("edges: expected [u, v] pairs");
        }
        edges.push_back(edge(item[0].get<VertexId>(), item[1].get<VertexId>()));
    }
    return edges;
}

// ---------------------------------------------------------------------------
// Decomposition file format: {"n": 8, "m": M, "parts": [[[a,b],...], ...]}
// with layer-major vertex ids and sorted edges.
// ---------------------------------------------------------------------------

struct DecompositionFile {
    int n = 8;
    int m = 1;
    std::vector<EdgeList> parts;

    Graph product() const { return cartesian_product(complete_graph(n), path_graph(m)); }
};

inline json decomposition_to_json(const DecompositionFile& d) {
    json out;
    out["n"] = d.n;
    out["m"] = d.m;
    out["parts"] = json::array();
    for (const EdgeList& part : d.parts) out["parts"].push_back(edges_to_json(sorted_edges(part)));
    return out;
}

inline json decomposition_to_json(const BiplanarDecomposition& d) {
    return decomposition_to_json(DecompositionFile{8, d.m, {d.part1, d.part2}});
}

inline DecompositionFile decomposition_from_json(const json& in) {
    if (!in.is_object() || !in.contains("n") || !in.contains("m") || !in.contains("parts")) {
        throw FormatError("decomposition: expected {n, m, parts}");
    }
    DecompositionFile d;
    d.n = in["n"].get<int>();
    d.m = in["m"].get<int>();
    if (d.n < 1 || d.m < 1) throw FormatError("decomposition: n and m must be >= 1");
    if (!in["parts"].is_array() || in["parts"].empty()) {
        throw FormatError("decomposition: parts must be a nonempty array");
    }
    for (const json& part : in["parts"]) d.parts.push_back(edges_from_json(part));
    return d;
}

inline json report_to_json(const DecompositionReport& r) {
    json out;
    out["is_partition"] = r.is_partition;
    out["parts_planar"] = r.parts_planar;
    out["missing_edges"] = edges_to_json(r.missing_edges);
    out["duplicated_edges"] = edges_to_json(r.duplicated_edges);
    out["extra_edges"] = edges_to_json(r.extra_edges);
    out["thickness_upper_witnessed"] = r.thickness_upper_witnessed;
    return out;
}

inline json bound_report_to_json(const BoundReport& r) {
    json out;
    out["lower"] = r.lower;
    out["upper"] = r.upper;
    out["exact"] = r.exact;
    out["provenance"] = r.provenance;
    return out;
}

inline json census_to_json(const FaceCensus& c) {
    json out;
    out["n"] = c.n;
    out["total_faces"] = c.total_faces;
    out["path_faces"] = c.path_faces;
    out["face_lengths"] = c.face_lengths;
    out["checks"] = {{"total_faces_within_bound", c.total_faces_within_bound},
                     {"path_faces_within_bound", c.path_faces_within_bound},
                     {"min_face_length_ok", c.min_face_length_ok},
                     {"path_face_length_ok", c.path_face_length_ok}};
    out["all_ok"] = c.all_ok();
    return out;
}

inline json embedding_to_json(const Embedding& e) {
    json rotation = json::object();
    for (VertexId v = 0; v < e.graph.vertex_count(); ++v) {
        rotation[std::to_string(v)] = e.rotation[static_cast<std::size_t>(v)];
    }
    json out;
    out["rotation"] = std::move(rotation);
    if (!e.component_placement.empty()) {
        json placement = json::object();
        for (const auto& [comp, where] : e.component_placement) {
            placement[std::to_string(comp)] =
                json::array({where.first, where.second});
        }
        out["component_placement"] = std::move(placement);
    }
    return out;
}

inline json certificate_to_json(const PlanarityCertificate& cert) {
    json out;
    if (cert.planar()) {
        out["kind"] = "embedding";
        out["embedding"] = embedding_to_json(*cert.embedding);
    } else {
        out["kind"] = "kuratowski";
        out["shape"] = cert.witness->kind == KuratowskiWitness::Kind::k5 ? "K5" : "K3,3";
        out["edges"] = edges_to_json(cert.witness->edges);
        out["branch_vertices"] = cert.witness->branch_vertices;
    }
    return out;
}

inline const char* solver_status_name(SolverStatus s) {
    switch (s) {
        case SolverStatus::solved: return "solved";
        case SolverStatus::exceeds_k_max: return "exceeds_k_max";
        case SolverStatus::refused: return "refused";
    }
    return "refused";
}

inline json solver_result_to_json(const SolverResult& r) {
    json out;
    out["status"] = solver_status_name(r.status);
    if (r.status == SolverStatus::solved) {
        out["thickness"] = r.thickness;
        out["witness"] = json::array();
        for (const EdgeList& part : r.witness) out["witness"].push_back(edges_to_json(part));
    }
    out["stats"] = {{"nodes", r.stats.nodes}, {"planarity_calls", r.stats.planarity_calls}};
    if (!r.refusal_reason.empty()) out["refusal_reason"] = r.refusal_reason;
    return out;
}

}  // namespace thicklab

#endif
