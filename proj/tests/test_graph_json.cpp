#include "doctest.h"

#include <cmath>

#include "updraw/generate.hpp"
#include "updraw/graph.hpp"
#include "updraw/json_io.hpp"

using namespace updraw;

TEST_CASE("graph json round trip preserves structure") {
    PlaneStGraph g = gen_fig3();
    PlaneStGraph h = graph_from_json(graph_to_json(g));
    REQUIRE(h.n() == g.n());
    REQUIRE(h.m() == g.m());
    CHECK(h.source == g.source);
    CHECK(h.sink == g.sink);
    for (VertexId v = 0; v < g.n(); ++v) {
        CHECK(h.names[v] == g.names[v]);
        REQUIRE(h.rotation[v].size() == g.rotation[v].size());
        for (size_t i = 0; i < g.rotation[v].size(); ++i) {
            const Edge& a = g.edges[g.rotation[v][i]];
            const Edge& b = h.edges[h.rotation[v][i]];
            CHECK(g.names[a.tail] == h.names[b.tail]);
            CHECK(g.names[a.head] == h.names[b.head]);
        }
    }
}

TEST_CASE("drawing json round trip is bit exact on doubles") {
    Drawing d;
    d.vertices.push_back({"a", {0.1 + 0.2, -1e-17}});
    d.vertices.push_back({"b", {1234567890.123456, 3.0e300}});
    Drawing::Edge e;
    e.tail = 0;
    e.head = 1;
    e.bends.push_back({std::nextafter(1.0, 2.0), -0.0});
    d.edges.push_back(e);

    Drawing r = drawing_from_json(drawing_to_json(d));
    REQUIRE(r.vertices.size() == 2);
    REQUIRE(r.edges.size() == 1);
    CHECK(r.vertices[0].pos.x == d.vertices[0].pos.x);
    CHECK(r.vertices[0].pos.y == d.vertices[0].pos.y);
    CHECK(r.vertices[1].pos.x == d.vertices[1].pos.x);
    CHECK(r.vertices[1].pos.y == d.vertices[1].pos.y);
    CHECK(r.edges[0].bends[0].x == d.edges[0].bends[0].x);
}

TEST_CASE("faces satisfy the euler formula on the fixture graph") {
    PlaneStGraph g = gen_fig3();
    FaceList fl = faces(g);
    CHECK(g.n() - g.m() + (int)fl.faces.size() == 2);
}

TEST_CASE("validate accepts the generators and rejects a broken rotation") {
    CHECK(validate(gen_fig3()).ok());
    CHECK(validate(gen_fan(5)).ok());
    CHECK(validate(gen_nonbitonic_witness()).ok());

    PlaneStGraph g = gen_fig3();
    /* interleave in and out edges at one vertex */
    std::swap(g.rotation[2][0], g.rotation[2][1]);
    CHECK_FALSE(validate(g).ok());
}

TEST_CASE("subdivide splits one edge and keeps the embedding valid") {
    PlaneStGraph g = gen_fig3();
    int n0 = g.n(), m0 = g.m();
    VertexId d = subdivide(g, 3);
    CHECK(g.n() == n0 + 1);
    CHECK(g.m() == m0 + 1);
    CHECK(g.vkind[d] == VertexKind::Subdiv);
    CHECK(g.degree(d) == 2);
    CHECK(validate(g).ok());
}

TEST_CASE("out_edges_cw starts the block after the incoming edges") {
    PlaneStGraph g = gen_fig3();
    for (VertexId v = 0; v < g.n(); ++v) {
        auto outs = out_edges_cw(g, v);
        for (EdgeId e : outs) CHECK(g.edges[e].tail == v);
        CHECK((int)outs.size() == (int)g.out_edges(v).size());
    }
    /* v3 (0-based id 2) has ins {v1} and outs {v5, v6} */
    auto outs = out_edges_cw(g, 2);
    REQUIRE(outs.size() == 2);
    CHECK(g.edges[outs[0]].head == 4);
    CHECK(g.edges[outs[1]].head == 5);
}
