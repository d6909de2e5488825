#pragma once

#include <string>
#include <vector>

#include "updraw/graph.hpp"

namespace updraw {

/* set of undirected segment slopes, as angles in [0, pi); must contain the
 * horizontal slope 0 and at least one other */
struct SlopeSet {
    std::vector<double> angles; /* sorted, unique, angles[0] == 0 */
    int size() const { return (int)angles.size(); }
};

/* {k*pi/delta : 0 <= k < delta} */
SlopeSet equispaced(int delta);

/* normalizes to [0, pi), sorts, deduplicates; throws input_error when the
 * horizontal slope is missing or fewer than two slopes remain */
SlopeSet make_slope_set(std::vector<double> angles);

/* "equispaced:5" or a comma list of angles, radians by default, degrees
 * with a "deg" suffix (e.g. "0,45deg,90deg") */
SlopeSet parse_slopes(const std::string& text);

/* real slopes plus the synthetic slopes reserved for dummy edges: between
 * consecutive real slopes (cyclically over [0,pi)) sit delta_star extra
 * slopes at spacing rho_star/(delta_star+1) */
struct ExtendedSlopeSet {
    SlopeSet real;
    double rho_star = 0;  /* smallest cyclic gap between real slopes */
    int delta_star = 0;   /* dummy slopes per gap */
    std::vector<double> all;       /* sorted, real and dummy interleaved */
    std::vector<bool> real_flag;   /* parallel to all */

    int index_of(double angle, double tol = 1e-9) const;
};

ExtendedSlopeSet extend(const SlopeSet& s, int delta_star);

} // namespace updraw
