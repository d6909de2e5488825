#pragma once

#include <map>
#include <vector>

#include "updraw/augment.hpp"
#include "updraw/drawing.hpp"
#include "updraw/graph.hpp"
#include "updraw/ordering.hpp"
#include "updraw/slopes.hpp"

namespace updraw {

/* state of the partial drawing after one incremental step, for the
 * step-by-step invariant suite */
struct StepSnapshot {
    int step = 0;                        /* vertices placed so far */
    std::vector<VertexId> outer_path;    /* left pole ... right pole */
    std::vector<EdgeId> outer_path_edges;
    std::vector<char> placed;            /* per vertex */
    std::vector<Pt> coords;              /* valid where placed */
    std::vector<std::vector<Pt>> polylines; /* per edge, tail->head; empty = not drawn */
};

struct DrawOptions {
    bool trace = false;        /* record a snapshot after every step */
    double strict_eps = 0.0;   /* > 0: tilt horizontal segments afterwards */
};

/* drawing of the augmented, triangulated graph (poles and dummy edges
 * included, withheld base edges omitted) */
struct AugmentedDrawing {
    std::vector<Pt> coords;
    std::vector<std::vector<Pt>> polylines;
    std::vector<StepSnapshot> steps;
};

AugmentedDrawing draw_augmented(const CanonicalAugmentation& aug,
                                const ExtendedSlopeSet& slopes,
                                bool trace);

/* keep only input vertices and edges that draw as part of the input graph */
Drawing strip_dummies(const CanonicalAugmentation& aug, const AugmentedDrawing& ad);

struct OneBendResult {
    Drawing drawing;
    CanonicalAugmentation aug;
    ExtendedSlopeSet slopes;
    AugmentedDrawing aug_drawing;
};

/* one bend per edge, slopes from s only; input must be bitonic with max
 * degree at most |s| */
OneBendResult draw_1bend(const PlaneStGraph& g, const SlopeSet& s,
                         const DrawOptions& opt = {});

/* max-degree-3 graphs: flip the embedding of g minus (s,t) and reattach
 * (s,t) on the other side, removing the only possible obstruction to a
 * bitonic ordering */
PlaneStGraph reroute_deg3(const PlaneStGraph& g);

/* tilt horizontal segments to slope +/-eps (by segment orientation) so the
 * drawing becomes strictly upward; non-horizontal slopes are preserved;
 * retries with halved eps until the result is planar and strict */
Drawing make_strict(const Drawing& d, double eps);

} // namespace updraw
