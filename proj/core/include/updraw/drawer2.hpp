#pragma once

#include "updraw/drawer.hpp"

namespace updraw {

struct BendBudget {
    int m1 = 0;    /* edges drawn with one bend */
    int m2 = 0;    /* edges that were subdivided (two bends each, pre-merge) */
    int total = 0; /* m1 + 2*m2 */
    int bound = 0; /* 4n-9 */
    int post_merge_total = 0;
};

struct TwoBendResult {
    Drawing drawing;
    BendBudget budget;
    CanonicalAugmentation aug;
    ExtendedSlopeSet slopes;
    BitonicSubdivision sub;
    AugmentedDrawing aug_drawing;
};

/* arbitrary planar st-graphs: subdivide enough edges to reach a bitonic
 * ordering, draw with one bend per (sub)edge and straight upper stubs, then
 * turn subdivision vertices into bends */
TwoBendResult draw_2bend(const PlaneStGraph& g, const SlopeSet& s,
                         const DrawOptions& opt = {});

} // namespace updraw
