#include "doctest.h"

#include <cmath>

#include "updraw/slopes.hpp"

using namespace updraw;

TEST_CASE("equispaced slope sets") {
    SlopeSet s = equispaced(4);
    REQUIRE(s.size() == 4);
    CHECK(s.angles[0] == doctest::Approx(0.0));
    CHECK(s.angles[1] == doctest::Approx(M_PI / 4));
    CHECK(s.angles[2] == doctest::Approx(M_PI / 2));
    CHECK(s.angles[3] == doctest::Approx(3 * M_PI / 4));
}

TEST_CASE("parsing slope lists") {
    SlopeSet a = parse_slopes("equispaced:5");
    CHECK(a.size() == 5);
    SlopeSet b = parse_slopes("0,45deg,90deg");
    REQUIRE(b.size() == 3);
    CHECK(b.angles[1] == doctest::Approx(M_PI / 4));
    CHECK_THROWS_AS(parse_slopes("0.3,1.2"), input_error);   /* no horizontal */
    CHECK_THROWS_AS(parse_slopes("0"), input_error);          /* too few */
    CHECK(make_slope_set({0.0, M_PI, 0.5}).size() == 2);      /* pi folds onto 0 */
}

TEST_CASE("extended sets interleave dummy slopes in every gap") {
    SlopeSet s = equispaced(3);
    ExtendedSlopeSet e = extend(s, 2);
    CHECK(e.rho_star == doctest::Approx(M_PI / 3));
    CHECK((int)e.all.size() == 3 + 3 * 2);
    int reals = 0;
    for (size_t i = 0; i + 1 < e.all.size(); ++i) CHECK(e.all[i] < e.all[i + 1]);
    for (size_t i = 0; i < e.all.size(); ++i) reals += e.real_flag[i] ? 1 : 0;
    CHECK(reals == 3);
    for (int i = 0; i < 3; ++i) CHECK(e.real_flag[e.index_of(s.angles[i])]);
    /* every pair of consecutive reals has exactly delta_star dummies between */
    int run = 0;
    for (size_t i = 1; i < e.all.size(); ++i) {
        if (e.real_flag[i]) {
            CHECK(run == 2);
            run = 0;
        } else {
            ++run;
        }
    }
}

TEST_CASE("uneven slope sets still get valid dummy slopes") {
    SlopeSet s = make_slope_set({0.0, 0.3, 2.8});
    ExtendedSlopeSet e = extend(s, 3);
    CHECK(e.rho_star == doctest::Approx(0.3));
    for (size_t i = 0; i + 1 < e.all.size(); ++i) CHECK(e.all[i] < e.all[i + 1]);
    CHECK(e.all.front() >= 0.0);
    CHECK(e.all.back() < M_PI);
}
