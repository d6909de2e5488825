#include "updraw/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "updraw/verify.hpp"

namespace updraw {

namespace {

double norm2pi(double a) {
    a = std::fmod(a, 2 * M_PI);
    if (a < 0) a += 2 * M_PI;
    return a;
}

struct RayView {
    const CanonicalAugmentation& aug;
    const ExtendedSlopeSet& ext;
    const StepSnapshot& snap;
    int K;

    RayView(const CanonicalAugmentation& a, const ExtendedSlopeSet& e, const StepSnapshot& s)
        : aug(a), ext(e), snap(s), K((int)e.all.size()) {}

    bool used_top(VertexId v, int k) const {
        Pt o = snap.coords[v];
        double want = ext.all[k];
        for (EdgeId e = 0; e < (int)snap.polylines.size(); ++e) {
            const auto& pl = snap.polylines[e];
            if (pl.size() < 2) continue;
            if (aug.g.edges[e].tail != v && aug.g.edges[e].head != v) continue;
            Pt d = (aug.g.edges[e].tail == v) ? pl[1] - pl[0] : pl[pl.size() - 2] - pl.back();
            (void)o;
            double a = norm2pi(std::atan2(d.y, d.x));
            if (std::abs(a - want) < 1e-6) return true;
        }
        return false;
    }

    Pt seg_dir_at(EdgeId e, VertexId v) const {
        const auto& pl = snap.polylines[e];
        return (aug.g.edges[e].tail == v) ? pl[1] - pl[0] : pl[pl.size() - 2] - pl.back();
    }

    bool wedge(VertexId v, double& ar, double& span) const {
        int p = -1;
        for (int i = 0; i < (int)snap.outer_path.size(); ++i)
            if (snap.outer_path[i] == v) p = i;
        if (p < 0) return false;
        Pt dr = (p == (int)snap.outer_path.size() - 1)
                    ? Pt{1, 0}
                    : seg_dir_at(snap.outer_path_edges[p], v);
        Pt dl = (p == 0) ? Pt{-1, 0} : seg_dir_at(snap.outer_path_edges[p - 1], v);
        ar = norm2pi(std::atan2(dr.y, dr.x));
        span = norm2pi(std::atan2(dl.y, dl.x) - ar);
        if (span <= 0) span = 2 * M_PI;
        return true;
    }

    bool outer_top(VertexId v, int k, double ar, double span) const {
        double t = norm2pi(ext.all[k] - ar);
        return t > 1e-9 && t < span - 1e-9;
    }
};

} // namespace

Diagnostics check_invariants(const CanonicalAugmentation& aug,
                             const ExtendedSlopeSet& ext,
                             const StepSnapshot& snap) {
    Diagnostics diag;
    const PlaneStGraph& g = aug.g;
    const std::string tag = " (step " + std::to_string(snap.step) + ")";

    /* I1 via the drawing verifier: geometry of everything drawn so far, and
     * slope membership of the real part against the real slopes only */
    Drawing full, real;
    std::vector<int> vid(g.n(), -1);
    for (VertexId v = 0; v < g.n(); ++v)
        if (snap.placed[v]) {
            vid[v] = (int)full.vertices.size();
            full.vertices.push_back({g.names[v], snap.coords[v]});
        }
    real.vertices = full.vertices;
    bool one_bend = true;
    for (EdgeId e = 0; e < (EdgeId)g.edges.size(); ++e) {
        const auto& pl = snap.polylines[e];
        if (pl.size() < 2) continue;
        if (pl.size() > 3) one_bend = false;
        Drawing::Edge de;
        de.tail = vid[g.edges[e].tail];
        de.head = vid[g.edges[e].head];
        de.bends.assign(pl.begin() + 1, pl.end() - 1);
        full.edges.push_back(de);
        if (g.edges[e].kind != EdgeKind::Dummy) real.edges.push_back(de);
    }
    DrawingReport fr = check(full, &ext.all, false, 1e-6);
    DrawingReport rr = check(real, &ext.real.angles, false, 1e-9);
    diag.add("i1-planar" + tag, fr.planar, fr.planar_detail);
    diag.add("i1-upward" + tag, fr.upward, "");
    diag.add("i1-one-bend" + tag, one_bend, "");
    diag.add("i1-real-slopes" + tag, rr.slope_membership, rr.slope_detail);

    /* I2 */
    bool i2 = true;
    for (EdgeId e : snap.outer_path_edges) {
        const auto& pl = snap.polylines[e];
        bool horiz = false;
        for (size_t i = 0; i + 1 < pl.size(); ++i)
            horiz |= std::abs(pl[i + 1].y - pl[i].y) <= 1e-12 * (1 + std::abs(pl[i].y));
        i2 &= horiz;
    }
    diag.add("i2-boundary-horizontal" + tag, i2, "");

    /* I3 / I4 */
    RayView rv(aug, ext, snap);
    bool i3 = true, i4 = true;
    std::string w3, w4;
    for (VertexId v : snap.outer_path) {
        int need_r = 0;
        for (EdgeId e : g.rotation[v]) {
            VertexId w = g.other(e, v);
            if (snap.placed[w]) continue;
            if (g.edges[e].kind != EdgeKind::Dummy) ++need_r;
        }
        double ar, span;
        if (!rv.wedge(v, ar, span)) continue;
        /* free outward rays, ascending by angle, tagged by kind */
        std::vector<char> have;
        int have_r = 0;
        for (int k = 1; k < rv.K; ++k) {
            if (rv.used_top(v, k) || !rv.outer_top(v, k, ar, span)) continue;
            have.push_back((char)(bool)ext.real_flag[k]);
            if (ext.real_flag[k]) ++have_r;
        }
        if (have_r < need_r) {
            i3 = false;
            w3 = "vertex " + g.names[v] + " has " + std::to_string(have_r) +
                 " outer real top rays, needs " + std::to_string(need_r);
        }
        /* undrawn out-edges, ascending by angle (reverse of the clockwise
         * rotation block), tagged by kind */
        const auto& rot = g.rotation[v];
        int nr = (int)rot.size();
        auto is_out = [&](int i) { return g.edges[rot[i]].tail == v; };
        int start = 0;
        for (int i = 0; i < nr; ++i)
            if (is_out(i) && !is_out((i + nr - 1) % nr)) {
                start = i;
                break;
            }
        std::vector<char> want;
        for (int i = 0; i < nr; ++i) {
            int j = (start + i) % nr;
            if (!is_out(j)) continue;
            if (snap.placed[g.edges[rot[j]].head]) continue;
            want.push_back((char)(g.edges[rot[j]].kind != EdgeKind::Dummy));
        }
        std::reverse(want.begin(), want.end());
        /* the pending edges must fit the free rays order-preservingly, kind
         * by kind, or some later step runs out of usable directions */
        size_t r = 0;
        bool fits = true;
        for (char wr : want) {
            while (r < have.size() && have[r] != wr) ++r;
            if (r == have.size()) {
                fits = false;
                break;
            }
            ++r;
        }
        if (!fits) {
            i4 = false;
            w4 = "vertex " + g.names[v] +
                 ": pending edges do not fit the free outward rays in order";
        }
    }
    diag.add("i3-real-ray-supply" + tag, i3, w3);
    diag.add("i4-ray-order" + tag, i4, w4);

    /* I5: the outer path polyline meets every horizontal line left to right */
    std::vector<Pt> walk;
    for (int i = 0; i < (int)snap.outer_path_edges.size(); ++i) {
        EdgeId e = snap.outer_path_edges[i];
        std::vector<Pt> pl = snap.polylines[e];
        if (g.edges[e].tail != snap.outer_path[i]) std::reverse(pl.begin(), pl.end());
        if (walk.empty()) walk.push_back(pl.front());
        walk.insert(walk.end(), pl.begin() + 1, pl.end());
    }
    std::set<double> ys;
    for (const Pt& p : walk) ys.insert(p.y);
    std::vector<double> levels(ys.begin(), ys.end());
    std::vector<double> sweeps = levels;
    for (size_t i = 0; i + 1 < levels.size(); ++i)
        sweeps.push_back((levels[i] + levels[i + 1]) / 2);
    bool i5 = true;
    std::string w5;
    for (double y : sweeps) {
        std::vector<double> xs;
        for (size_t i = 0; i + 1 < walk.size(); ++i) {
            Pt a = walk[i], b = walk[i + 1];
            double tol = 1e-9 * (1 + std::abs(y));
            bool ah = std::abs(a.y - y) <= tol, bh = std::abs(b.y - y) <= tol;
            if (ah && bh) {
                xs.push_back(a.x);
                xs.push_back(b.x);
            } else if ((a.y < y && b.y > y) || (a.y > y && b.y < y) || ah || bh) {
                double f = (y - a.y) / (b.y - a.y);
                xs.push_back(a.x + f * (b.x - a.x));
            }
        }
        for (size_t i = 0; i + 1 < xs.size() && i5; ++i)
            if (xs[i + 1] < xs[i] - 1e-6 * (1 + std::abs(xs[i]))) {
                i5 = false;
                w5 = "sweep at y=" + std::to_string(y) + " meets the path out of order";
            }
        if (!i5) break;
    }
    diag.add("i5-sweep-order" + tag, i5, w5);
    return diag;
}

} // namespace updraw
