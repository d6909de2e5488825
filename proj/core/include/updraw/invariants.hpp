#pragma once

#include "updraw/augment.hpp"
#include "updraw/drawer.hpp"
#include "updraw/slopes.hpp"

namespace updraw {

/* geometric re-check of the construction's step invariants, computed from
 * the snapshot alone:
 *   i1: planar, upward, at most one bend, real edges on real slopes
 *   i2: every outer-path edge contains a horizontal segment
 *   i3: enough free outward top rays of real kind per outer-path vertex
 *   i4: enough free outward dummy top rays next to the horizontals
 *   i5: sweep lines meet the outer path in path order */
Diagnostics check_invariants(const CanonicalAugmentation& aug,
                             const ExtendedSlopeSet& ext,
                             const StepSnapshot& snap);

} // namespace updraw
