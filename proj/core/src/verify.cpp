#include "updraw/verify.hpp"

#include <algorithm>
#include <cmath>

namespace updraw {

namespace {

bool pts_equal(Pt a, Pt b) {
    double s = 1 + std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x), std::abs(b.y)});
    return std::hypot(a.x - b.x, a.y - b.y) <= 1e-9 * s;
}

/* sign of the cross product of (b-a) and (c-a), with a zero band sized to
 * the worst-case rounding error of that expression: forming the two
 * difference vectors loses up to one ulp of the largest coordinate per
 * component, and the products lose ulps of their own magnitude */
int side(Pt a, Pt b, Pt c) {
    Pt u = b - a, v = c - a;
    double x = cross(u, v);
    double mc = std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x), std::abs(b.y),
                          std::abs(c.x), std::abs(c.y)});
    double lu = std::abs(u.x) + std::abs(u.y);
    double lv = std::abs(v.x) + std::abs(v.y);
    double tol = 64.0 * 2.220446049250313e-16 * (mc * (lu + lv) + lu * lv) + 1e-300;
    if (x > tol) return 1;
    if (x < -tol) return -1;
    return 0;
}

bool on_segment(Pt p, Pt a, Pt b) {
    if (side(a, b, p) != 0) return false;
    /* bounding-box test with an absolute slack at the rounding scale of
     * the coordinates (a slack relative to the segment length would admit
     * points far beyond a long segment's endpoint) */
    double mc = std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x), std::abs(b.y),
                          std::abs(p.x), std::abs(p.y)});
    double tol = 64.0 * 2.220446049250313e-16 * mc + 1e-12;
    return p.x >= std::min(a.x, b.x) - tol && p.x <= std::max(a.x, b.x) + tol &&
           p.y >= std::min(a.y, b.y) - tol && p.y <= std::max(a.y, b.y) + tol;
}

/* true when two segments meet anywhere other than a shared endpoint of
 * both, counting collinear overlap as a conflict */
bool segments_conflict(Pt a, Pt b, Pt c, Pt d) {
    int o1 = side(a, b, c), o2 = side(a, b, d);
    int o3 = side(c, d, a), o4 = side(c, d, b);
    bool s1 = o1 * o2 < 0;
    bool s2 = o3 * o4 < 0;
    if (s1 && s2) return true; /* proper crossing */

    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        /* collinear: compare the intervals along the dominant axis with
         * plain coordinate comparisons (a relative parameter threshold
         * would dilate with the segment length) */
        double span_x = std::max(std::abs(b.x - a.x), std::abs(d.x - c.x));
        double span_y = std::max(std::abs(b.y - a.y), std::abs(d.y - c.y));
        auto key = [&](Pt p) { return span_x >= span_y ? p.x : p.y; };
        double lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
        double lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
        double lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        if (lo > hi) return false;
        if (lo < hi) return true; /* overlap of positive length */
        /* single-point touch must be a shared endpoint of both */
        const Pt* e1 = key(a) == lo ? &a : key(b) == lo ? &b : nullptr;
        const Pt* e2 = key(c) == lo ? &c : key(d) == lo ? &d : nullptr;
        return !(e1 && e2 && pts_equal(*e1, *e2));
    }

    /* non-collinear touching: every contact point must be an endpoint of
     * both segments */
    for (Pt p : {c, d})
        if (on_segment(p, a, b) && !((pts_equal(p, a) || pts_equal(p, b))))
            return true;
    for (Pt p : {a, b})
        if (on_segment(p, c, d) && !((pts_equal(p, c) || pts_equal(p, d))))
            return true;
    return false;
}

double angle_mod_pi(Pt d) {
    double a = std::atan2(d.y, d.x);
    if (a < 0) a += M_PI;
    if (a >= M_PI - 1e-12) a = 0;
    return a;
}

double circ_dist_pi(double a, double b) {
    double d = std::abs(a - b);
    return std::min(d, M_PI - d);
}

} // namespace

DrawingReport check(const Drawing& d, const std::vector<double>* allowed_slopes,
                    bool strict, double tol) {
    DrawingReport rep;

    std::vector<std::vector<Pt>> polys;
    for (int e = 0; e < (int)d.edges.size(); ++e) polys.push_back(d.polyline(e));

    for (const auto& v : d.vertices)
        rep.finite &= std::isfinite(v.pos.x) && std::isfinite(v.pos.y);
    for (const auto& pl : polys)
        for (const Pt& p : pl) rep.finite &= std::isfinite(p.x) && std::isfinite(p.y);
    if (!rep.finite) {
        rep.planar = rep.upward = rep.upward_strict = false;
        return rep;
    }

    /* bends and upwardness */
    for (int e = 0; e < (int)d.edges.size(); ++e) {
        int nb = (int)d.edges[e].bends.size();
        rep.max_bends_per_edge = std::max(rep.max_bends_per_edge, nb);
        rep.total_bends += nb;
        const auto& pl = polys[e];
        for (size_t i = 0; i + 1 < pl.size(); ++i) {
            double dy = pl[i + 1].y - pl[i].y;
            double s = 1 + std::max(std::abs(pl[i].y), std::abs(pl[i + 1].y));
            if (dy < -1e-12 * s) rep.upward = false;
            if (dy <= 0) rep.upward_strict = false;
        }
    }

    /* planarity: pairwise segment conflicts */
    struct Seg { Pt a, b; int e; };
    std::vector<Seg> segs;
    for (int e = 0; e < (int)d.edges.size(); ++e)
        for (size_t i = 0; i + 1 < polys[e].size(); ++i)
            segs.push_back({polys[e][i], polys[e][i + 1], e});
    for (size_t i = 0; i < segs.size() && rep.planar; ++i)
        for (size_t j = i + 1; j < segs.size(); ++j) {
            /* consecutive segments of one edge legitimately share the bend */
            if (segments_conflict(segs[i].a, segs[i].b, segs[j].a, segs[j].b)) {
                rep.planar = false;
                rep.planar_detail = "edges " + std::to_string(segs[i].e) + " and " +
                                    std::to_string(segs[j].e) + " intersect";
                break;
            }
        }

    /* slopes */
    std::vector<double> angles;
    for (const auto& pl : polys)
        for (size_t i = 0; i + 1 < pl.size(); ++i) {
            Pt dd = pl[i + 1] - pl[i];
            if (std::abs(dd.x) < 1e-300 && std::abs(dd.y) < 1e-300) continue;
            angles.push_back(angle_mod_pi(dd));
        }
    if (allowed_slopes) {
        for (double a : angles) {
            bool member = false;
            for (double s : *allowed_slopes)
                member |= circ_dist_pi(a, s) <= tol;
            if (!member) {
                rep.slope_membership = false;
                rep.slope_detail = "segment slope " + std::to_string(a) + " not in the slope set";
                break;
            }
        }
    }
    /* distinct slopes: cluster angles closer than the tolerance */
    std::sort(angles.begin(), angles.end());
    double gap = std::max(2 * tol, 1e-9);
    for (size_t i = 0; i < angles.size(); ++i)
        if (i == 0 || circ_dist_pi(angles[i], rep.slopes_used.back()) > gap)
            rep.slopes_used.push_back(angles[i]);
    if (rep.slopes_used.size() >= 2 &&
        circ_dist_pi(rep.slopes_used.front(), rep.slopes_used.back()) <= gap)
        rep.slopes_used.pop_back();

    /* angular resolution at vertices and bends */
    auto min_gap = [](std::vector<double>& dirs) {
        if (dirs.size() < 2) return 2 * M_PI;
        std::sort(dirs.begin(), dirs.end());
        double best = 2 * M_PI - (dirs.back() - dirs.front());
        for (size_t i = 0; i + 1 < dirs.size(); ++i)
            best = std::min(best, dirs[i + 1] - dirs[i]);
        return best;
    };
    std::vector<std::vector<double>> at_vertex(d.vertices.size());
    for (int e = 0; e < (int)d.edges.size(); ++e) {
        const auto& pl = polys[e];
        Pt d1 = pl[1] - pl[0];
        Pt d2 = pl[pl.size() - 2] - pl.back();
        at_vertex[d.edges[e].tail].push_back(std::atan2(d1.y, d1.x));
        at_vertex[d.edges[e].head].push_back(std::atan2(d2.y, d2.x));
    }
    rep.angular_resolution = 2 * M_PI;
    for (auto& dirs : at_vertex) {
        for (double& a : dirs)
            if (a < 0) a += 2 * M_PI;
        if (dirs.size() >= 2) rep.angular_resolution = std::min(rep.angular_resolution, min_gap(dirs));
    }
    rep.bend_resolution = 2 * M_PI;
    for (int e = 0; e < (int)d.edges.size(); ++e) {
        const auto& pl = polys[e];
        for (size_t i = 1; i + 1 < pl.size(); ++i) {
            Pt u = pl[i - 1] - pl[i], w = pl[i + 1] - pl[i];
            double au = std::atan2(u.y, u.x), aw = std::atan2(w.y, w.x);
            double dd = std::abs(au - aw);
            if (dd > M_PI) dd = 2 * M_PI - dd;
            rep.bend_resolution = std::min(rep.bend_resolution, dd);
        }
    }
    return rep;
}

} // namespace updraw
