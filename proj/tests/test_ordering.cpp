#include "doctest.h"

#include <variant>

#include "oracle.hpp"
#include "updraw/generate.hpp"
#include "updraw/ordering.hpp"

using namespace updraw;

TEST_CASE("the witness graph has no bitonic ordering and a sound witness") {
    PlaneStGraph g = gen_nonbitonic_witness();
    auto r = bitonic_order(g);
    REQUIRE(std::holds_alternative<ForbiddenConfig>(r));
    const ForbiddenConfig& fc = std::get<ForbiddenConfig>(r);
    CHECK(fc.u == g.source);
    CHECK(witness_sound(g, fc));
    CHECK_FALSE(oracle_has_bitonic(g));
}

TEST_CASE("the fixture graph and fans are bitonic") {
    for (const PlaneStGraph& g : {gen_fig3(), gen_fan(3), gen_fan(7)}) {
        auto r = bitonic_order(g);
        REQUIRE(std::holds_alternative<StOrdering>(r));
        CHECK(is_bitonic(g, std::get<StOrdering>(r)));
        CHECK(oracle_has_bitonic(g));
    }
}

TEST_CASE("the degree-3 family is never bitonic") {
    for (int s = 1; s <= 5; ++s) {
        PlaneStGraph g = gen_cubic_nonbitonic(6 + s, 100 + s);
        auto r = bitonic_order(g);
        REQUIRE(std::holds_alternative<ForbiddenConfig>(r));
        CHECK(witness_sound(g, std::get<ForbiddenConfig>(r)));
    }
}

TEST_CASE("bitonic_order matches the exhaustive oracle on small graphs") {
    int checked = 0;
    for (int s = 1; s <= 40; ++s)
        for (int n = 4; n <= 7; ++n) {
            PlaneStGraph g;
            try {
                g = gen_random_st(n, 2 * n, s, 4);
            } catch (const internal_error&) {
                continue; /* tiny instances occasionally fail to close */
            }
            ++checked;
            auto r = bitonic_order(g);
            bool got = std::holds_alternative<StOrdering>(r);
            CHECK(got == oracle_has_bitonic(g));
            if (got) CHECK(is_bitonic(g, std::get<StOrdering>(r)));
            else CHECK(witness_sound(g, std::get<ForbiddenConfig>(r)));
        }
    CHECK(checked >= 100);
}

TEST_CASE("subdivision makes the witness graph bitonic within budget") {
    PlaneStGraph g = gen_nonbitonic_witness();
    BitonicSubdivision sub = bitonic_subdivide(g);
    CHECK((int)sub.splits.size() <= g.n() - 3);
    CHECK(std::holds_alternative<StOrdering>(bitonic_order(sub.graph)));
    for (const auto& rec : sub.splits) {
        CHECK(sub.graph.edges[rec.lower].kind == EdgeKind::LowerStub);
        CHECK(sub.graph.edges[rec.upper].kind == EdgeKind::UpperStub);
        CHECK(sub.graph.vkind[rec.dummy] == VertexKind::Subdiv);
    }
}

TEST_CASE("planted random instances are never bitonic") {
    for (int s = 1; s <= 5; ++s) {
        PlaneStGraph g = gen_random_nonbitonic(30, 50, s, 6);
        auto r = bitonic_order(g);
        REQUIRE(std::holds_alternative<ForbiddenConfig>(r));
        CHECK(witness_sound(g, std::get<ForbiddenConfig>(r)));
    }
}
