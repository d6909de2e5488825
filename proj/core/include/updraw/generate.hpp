#pragma once

#include <cstdint>

#include "updraw/graph.hpp"

namespace updraw {

/* source of degree delta whose successors form a descending chain; any
 * drawing of it needs delta distinct slopes */
PlaneStGraph gen_fan(int delta);

/* 6 vertices; the successor list of the source forces a decrease before an
 * increase, so no bitonic ordering exists */
PlaneStGraph gen_nonbitonic_witness();

/* fixed 8-vertex running example used by the step-trace tests */
PlaneStGraph gen_fig3();

/* seeded plane st-graph by incremental boundary attachment; max degree is
 * capped by dmax (>= 4), and edges are deleted at random down to about m */
PlaneStGraph gen_random_st(int n, int m, std::uint64_t seed, int dmax = 9);

/* seeded max-degree-3 graph that is provably not bitonic: a fixed core with
 * the obstruction at the source, grown by subdividing edges away from it */
PlaneStGraph gen_cubic_nonbitonic(int n, std::uint64_t seed);

/* seeded plane st-graph that is provably not bitonic: a random graph with
 * one extra vertex hung off each outer flank of the source, forcing its
 * successor row to decrease before it increases */
PlaneStGraph gen_random_nonbitonic(int n, int m, std::uint64_t seed, int dmax = 9);

/* mark every vertex and edge as plain input material */
PlaneStGraph relabel_real(const PlaneStGraph& g);

} // namespace updraw
