#pragma once

#include <string>
#include <vector>

#include "updraw/drawing.hpp"

namespace updraw {

/* pure geometric report on a drawing; independent of how it was made */
struct DrawingReport {
    bool finite = true;
    bool planar = true;
    std::string planar_detail; /* first violating pair, if any */
    bool upward = true;        /* y non-decreasing tail->head */
    bool upward_strict = true; /* y strictly increasing */
    bool slope_membership = true; /* vs allowed slopes, if given */
    std::string slope_detail;
    std::vector<double> slopes_used; /* distinct segment angles mod pi */
    int max_bends_per_edge = 0;
    int total_bends = 0;
    double angular_resolution = 0; /* min angle between segments at a vertex */
    double bend_resolution = 0;    /* same, at bend points */

    bool ok(bool strict) const {
        return finite && planar && (strict ? upward_strict : upward) && slope_membership;
    }
};

/* allowed_slopes: angles mod pi, or null to skip membership checking */
DrawingReport check(const Drawing& d, const std::vector<double>* allowed_slopes,
                    bool strict, double tol = 1e-6);

} // namespace updraw
