#include <algorithm>
#include <set>

#include "doctest.h"
#include "naive_oracles.hpp"
#include "thicklab/construction.hpp"
#include "thicklab/embedding.hpp"
#include "thicklab/planarity.hpp"

using namespace thicklab;

namespace {

// H2 as drawn: vertex labels 1..8 mapped to 0..7, rotations counterclockwise
// by the drawing's angles, labels 3 and 8 isolated.
Embedding h2_drawing_embedding() {
    Embedding emb;
    emb.graph = Graph(8, {{0, 1}, {0, 3}, {0, 5}, {0, 6}, {1, 3}, {1, 4}, {1, 5}, {3, 4},
                          {3, 6}, {4, 5}, {4, 6}, {5, 6}});
    emb.rotation = {
        {3, 1, 5, 6},  // v1
        {3, 4, 5, 0},  // v2
        {},            // v3 isolated
        {4, 1, 0, 6},  // v4
        {5, 1, 3, 6},  // v5
        {6, 0, 1, 4},  // v6
        {4, 3, 0, 5},  // v7
        {},            // v8 isolated
    };
    emb.outer_face_hint[0] = {4, 5, 6};  // the v5 v6 v7 triangle
    return emb;
}

int total_walk_count(const std::vector<Face>& fs) {
    int count = 0;
    for (const Face& f : fs) count += static_cast<int>(f.walks.size());
    return count;
}

}  // namespace

TEST_CASE("a lone triangle has two faces of length 3") {
    Embedding emb;
    emb.graph = complete_graph(3);
    emb.rotation = {{1, 2}, {2, 0}, {0, 1}};
    const auto fs = faces(emb);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].total_length() == 3);
    CHECK(fs[1].total_length() == 3);
}

TEST_CASE("an isolated vertex is one face with a length-0 walk") {
    Embedding emb;
    emb.graph = Graph(1, {});
    emb.rotation = {{}};
    const auto fs = faces(emb);
    REQUIRE(fs.size() == 1);
    REQUIRE(fs[0].walks.size() == 1);
    CHECK(fs[0].walks[0].length() == 0);
    CHECK(fs[0].walks[0].anchor == 0);
}

TEST_CASE("the H2 drawing has eight faces and outer walks of lengths 0, 3, 0") {
    const auto fs = faces(h2_drawing_embedding());
    REQUIRE(fs.size() == 8);

    const Face* outer = nullptr;
    for (const Face& f : fs) {
        if (f.walks.size() > 1) {
            REQUIRE(outer == nullptr);
            outer = &f;
        } else {
            CHECK(f.walks[0].length() == 3);
        }
    }
    REQUIRE(outer != nullptr);
    REQUIRE(outer->walks.size() == 3);
    std::multiset<int> lengths;
    for (const BoundaryWalk& w : outer->walks) lengths.insert(w.length());
    CHECK(lengths == std::multiset<int>{0, 0, 3});
    CHECK(outer->total_length() == 3);
    // the length-3 walk runs around v5 v6 v7; the trivial walks sit at v3, v8
    for (const BoundaryWalk& w : outer->walks) {
        if (w.length() == 3) {
            CHECK(std::set<VertexId>(w.path.begin(), w.path.end()) ==
                  std::set<VertexId>{4, 5, 6});
        } else {
            CHECK((w.anchor == 2 || w.anchor == 7));
        }
    }

    int total = 0;
    for (const Face& f : fs) total += f.total_length();
    CHECK(total == 2 * 12);
}

TEST_CASE("embedded H1 has ten faces") {
    const Graph h1(9, gadget_edges(GadgetKind::h1));
    const auto cert = is_planar(h1);
    REQUIRE(cert.planar());
    // the drawing proper: 8 vertices, 16 edges, so 10 faces; the unused
    // label-0 slot adds one trivial face and one merge
    const auto fs = faces(*cert.embedding);
    CHECK(fs.size() == 10);
}

TEST_CASE("face lengths of any embedding sum to twice the edge count") {
    testing::Rng rng(13);
    int planar_seen = 0;
    while (planar_seen < 60) {
        const Graph g = testing::random_graph(rng, 2 + rng.below(11), 20 + rng.below(60));
        const auto cert = is_planar(g);
        if (!cert.planar()) continue;
        ++planar_seen;
        const auto fs = faces(*cert.embedding);
        int total = 0;
        for (const Face& f : fs) total += f.total_length();
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("per-component Euler formula and the aggregate count") {
    testing::Rng rng(17);
    int planar_seen = 0;
    while (planar_seen < 40) {
        const Graph g = testing::random_graph(rng, 2 + rng.below(12), 10 + rng.below(30));
        const auto cert = is_planar(g);
        if (!cert.planar()) continue;
        ++planar_seen;
        int comp_count = 0;
        const auto local = component_faces(*cert.embedding, nullptr, &comp_count);
        CHECK(static_cast<int>(local.size()) == comp_count);  // throws unless v - e + f = 2
        const auto fs = faces(*cert.embedding);
        CHECK(static_cast<int>(fs.size()) ==
              1 + comp_count - g.vertex_count() + g.edge_count());
    }
}

TEST_CASE("structural errors") {
    Embedding bad;
    bad.graph = complete_graph(3);
    bad.rotation = {{1, 2}, {2, 0}, {0, 0}};  // not the neighbor set
    CHECK_THROWS_AS(faces(bad), EmbeddingError);

    bad.rotation = {{1, 2}, {2, 0}};  // wrong size
    CHECK_THROWS_AS(faces(bad), EmbeddingError);

    // K3,3 has no planar rotation at all, so Euler must fail per component
    Embedding toroidal;
    toroidal.graph =
        Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    toroidal.rotation.assign(6, {});
    for (VertexId v = 0; v < 6; ++v) {
        toroidal.rotation[static_cast<std::size_t>(v)] = toroidal.graph.neighbors(v);
    }
    CHECK_THROWS_AS(faces(toroidal), EmbeddingError);
}

TEST_CASE("component placement controls which face absorbs a component") {
    Embedding emb;
    emb.graph = Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    emb.rotation = {{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}};

    // default: second triangle floats in the outer face
    auto fs = faces(emb);
    REQUIRE(fs.size() == 3);
    CHECK(total_walk_count(fs) == 4);
    CHECK(fs[0].walks.size() == 2);  // aggregate outer face
    CHECK(fs[0].total_length() == 6);

    // nested inside the non-outer face of the first triangle
    emb.component_placement[1] = {0, 1};
    fs = faces(emb);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].walks.size() == 1);
    CHECK(fs[1].walks.size() == 2);
    CHECK(fs[1].total_length() == 6);

    // placing into the host's own outward face resolves to the host's region
    emb.component_placement[1] = {0, 0};
    fs = faces(emb);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].walks.size() == 2);

    emb.component_placement[1] = {1, 0};  // host must come earlier
    CHECK_THROWS_AS(faces(emb), EmbeddingError);
    emb.component_placement[1] = {0, 7};  // no such face
    CHECK_THROWS_AS(faces(emb), EmbeddingError);
}

TEST_CASE("outer face hints must match some face") {
    Embedding emb;
    emb.graph = complete_graph(3);
    emb.rotation = {{1, 2}, {2, 0}, {0, 1}};
    emb.outer_face_hint[0] = {0, 1, 2};
    CHECK(faces(emb).size() == 2);
    emb.outer_face_hint[0] = {0, 1, 2, 5};
    CHECK_THROWS_AS(faces(emb), EmbeddingError);
}
