#include "updraw/drawer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "updraw/verify.hpp"

namespace updraw {

namespace {

constexpr double kEps = 1e-9;

double norm_angle(double a) {
    a = std::fmod(a, 2 * M_PI);
    if (a < 0) a += 2 * M_PI;
    return a;
}

/* the incremental construction: places one vertex per step above the
 * current drawing, keeping the outer path horizontally stretchable */
struct Engine {
    const CanonicalAugmentation& aug;
    const PlaneStGraph& g;
    const ExtendedSlopeSet& ext;
    bool trace;
    int K; /* number of extended slopes; index 0 is horizontal */

    std::vector<char> removed_, placed_;
    std::vector<Pt> coords_;
    std::vector<std::vector<Pt>> poly_; /* per edge, tail->head; empty = not drawn */
    std::vector<VertexId> path_;
    std::vector<EdgeId> path_edges_;
    std::vector<int> path_pos_;
    std::vector<VertexId> cover_;
    std::vector<std::vector<char>> top_used_, bot_used_;
    std::vector<char> hleft_used_, hright_used_;
    std::vector<StepSnapshot> steps_;

    Engine(const CanonicalAugmentation& a, const ExtendedSlopeSet& e, bool tr)
        : aug(a), g(a.g), ext(e), trace(tr), K((int)e.all.size()) {
        removed_.assign(g.edges.size(), 0);
        for (EdgeId r : removed_base_edges(aug)) removed_[r] = 1;
        placed_.assign(g.n(), 0);
        coords_.assign(g.n(), {});
        poly_.assign(g.edges.size(), {});
        path_pos_.assign(g.n(), -1);
        cover_.assign(g.n(), -1);
        top_used_.assign(g.n(), std::vector<char>(K, 0));
        bot_used_.assign(g.n(), std::vector<char>(K, 0));
        hleft_used_.assign(g.n(), 0);
        hright_used_.assign(g.n(), 0);
    }

    Pt top_dir(int k) const { return {std::cos(ext.all[k]), std::sin(ext.all[k])}; }
    Pt bot_dir(int k) const { return {-std::cos(ext.all[k]), -std::sin(ext.all[k])}; }
    /* x/y slope of the line carrying ray k */
    double ray_cot(int k) const { return std::cos(ext.all[k]) / std::sin(ext.all[k]); }

    double ray_x(VertexId v, int k, double y) const {
        return coords_[v].x + (y - coords_[v].y) * ray_cot(k);
    }

    void rebuild_path_pos() {
        std::fill(path_pos_.begin(), path_pos_.end(), -1);
        for (int i = 0; i < (int)path_.size(); ++i) path_pos_[path_[i]] = i;
    }

    int root_pos(VertexId v) const {
        while (path_pos_[v] < 0) {
            v = cover_[v];
            if (v < 0) throw internal_error("vertex with no covering ancestor on the outer path");
        }
        return path_pos_[v];
    }

    /* direction of the segment of edge e at its endpoint v, pointing away */
    Pt seg_dir_at(EdgeId e, VertexId v) const {
        const auto& pl = poly_[e];
        if (pl.size() < 2) throw internal_error("querying an undrawn boundary edge");
        if (g.edges[e].tail == v) return pl[1] - pl[0];
        return pl[pl.size() - 2] - pl.back();
    }

    /* the free sector above v between its two outer-path edges */
    void wedge(VertexId v, double& a_right, double& span) const {
        int p = path_pos_[v];
        if (p < 0) throw internal_error("wedge query off the outer path");
        Pt dr = (p == (int)path_.size() - 1) ? Pt{1, 0} : seg_dir_at(path_edges_[p], v);
        Pt dl = (p == 0) ? Pt{-1, 0} : seg_dir_at(path_edges_[p - 1], v);
        a_right = norm_angle(std::atan2(dr.y, dr.x));
        span = norm_angle(std::atan2(dl.y, dl.x) - a_right);
        if (span <= 0) span = 2 * M_PI;
    }

    bool outer_top(VertexId v, int k) const {
        double ar, span;
        wedge(v, ar, span);
        double t = norm_angle(ext.all[k] - ar);
        return t > kEps && t < span - kEps;
    }

    /* free outer top ray of the wanted kind for edge cur at v; steeper
     * rays sweep across less of the drawing, so they are cheaper to clear,
     * but consuming one forfeits every free ray between it and the wedge
     * boundary (ccw=true: the clockwise boundary) for v's remaining
     * out-edges -- prefer the steepest candidate that still leaves enough
     * rays of each kind for them */
    int pick_top(VertexId v, bool want_real, bool ccw, EdgeId cur) const {
        /* undrawn out-edges of v, as a contiguous block of its rotation;
         * they will be drawn one by one inside the shrinking outer wedge,
         * so they claim free outer rays in rotation-consistent angular
         * order; picking a ray for cur is only safe if the remaining edges
         * still embed order-preservingly into the remaining rays */
        std::vector<EdgeId> outs;
        int nr = (int)g.rotation[v].size();
        int start = 0;
        for (int i = 0; i < nr; ++i) {
            EdgeId e = g.rotation[v][i];
            EdgeId pe = g.rotation[v][(i + nr - 1) % nr];
            if (g.edges[e].tail == v && g.edges[pe].head == v) { start = i; break; }
        }
        for (int i = 0; i < nr; ++i) {
            EdgeId e = g.rotation[v][(start + i) % nr];
            if (g.edges[e].tail == v && !removed_[e] && (poly_[e].empty() || e == cur))
                outs.push_back(e);
        }
        /* the clockwise rotation lists the out-block in descending angular
         * order; the matching below works in ascending order */
        std::reverse(outs.begin(), outs.end());
        (void)ccw;
        int p = -1;
        for (int i = 0; i < (int)outs.size(); ++i)
            if (outs[i] == cur) p = i;
        if (p < 0) throw internal_error("edge missing from its tail's rotation");
        std::vector<int> rays;
        for (int k = 1; k < K; ++k)
            if (!top_used_[v][k] && outer_top(v, k)) rays.push_back(k);

        auto is_real = [&](EdgeId e) { return g.edges[e].kind != EdgeKind::Dummy; };
        /* greedy order-preserving embedding of edge kinds into ray kinds */
        auto fits = [&](int e0, int e1, int r0, int r1) {
            int r = r0;
            for (int e = e0; e < e1; ++e) {
                bool wr = is_real(outs[e]);
                while (r < r1 && (bool)ext.real_flag[rays[r]] != wr) ++r;
                if (r == r1) return false;
                ++r;
            }
            return true;
        };

        int best = -1;
        double best_steep = -1;
        for (int r = 0; r < (int)rays.size(); ++r) {
            int k = rays[r];
            if ((bool)ext.real_flag[k] != want_real) continue;
            if (!fits(0, p, 0, r) || !fits(p + 1, (int)outs.size(), r + 1, (int)rays.size()))
                continue;
            double steep = std::min(ext.all[k], M_PI - ext.all[k]);
            if (steep > best_steep) { best_steep = steep; best = k; }
        }
        if (best < 0)
            throw internal_error("missing outer " + std::string(want_real ? "real" : "dummy") +
                                 " top ray at vertex " + g.names[v]);
        return best;
    }

    double max_drawn_y() const {
        double y = -1e300;
        for (const auto& pl : poly_)
            for (const Pt& p : pl) y = std::max(y, p.y);
        return y;
    }

    /* whether polyline point i of edge e moves when everything from path
     * position tpos rightwards moves */
    bool point_moves(EdgeId e, int i, const std::vector<char>& mv) const {
        const auto& pl = poly_[e];
        bool mt = mv[g.edges[e].tail], mh = mv[g.edges[e].head];
        if (i == 0) return mt;
        if (i == (int)pl.size() - 1) return mh;
        if (mt == mh) return mt;
        /* the bend follows the vertex of its non-horizontal segment */
        bool s1h = std::abs(pl[1].y - pl[0].y) < kEps;
        bool s2h = std::abs(pl[2].y - pl[1].y) < kEps;
        if (s1h && !s2h) return mh;
        if (s2h && !s1h) return mt;
        throw internal_error("cut crosses an edge without a horizontal segment");
    }

    std::vector<char> move_set(int tpos) const {
        std::vector<char> mv(g.n(), 0);
        for (VertexId v = 0; v < g.n(); ++v)
            if (placed_[v]) mv[v] = root_pos(v) >= tpos;
        return mv;
    }

    /* widen the drawing: everything from path position tpos rightwards moves
     * right by lam; crossing edges absorb it in their horizontal segment */
    void stretch(int tpos, double lam) {
        if (lam <= 0) return;
        auto mv = move_set(tpos);
        for (VertexId v = 0; v < g.n(); ++v)
            if (placed_[v] && mv[v]) coords_[v].x += lam;
        for (EdgeId e = 0; e < (EdgeId)g.edges.size(); ++e) {
            auto& pl = poly_[e];
            if (pl.empty()) continue;
            bool mt = mv[g.edges[e].tail], mh = mv[g.edges[e].head];
            if (pl.size() == 2 && mt != mh && std::abs(pl[1].y - pl[0].y) > kEps)
                throw internal_error("cut crosses a straight non-horizontal edge");
            std::vector<Pt> np = pl;
            for (int i = 0; i < (int)pl.size(); ++i)
                if (point_moves(e, i, mv)) np[i].x += lam;
            np.front() = coords_[g.edges[e].tail];
            np.back() = coords_[g.edges[e].head];
            pl = np;
        }
    }

    struct Obstacle {
        Pt a, b;
        EdgeId e;
        int seg;
        bool crossing; /* sign change, not just a near-miss */
    };

    /* segments that cross (or come within half a unit of) the upward ray
     * from v along slope k.  A segment's horizontal offset from the ray is
     * linear in y, so testing the endpoints, clipped to the ray's vertical
     * range, is exact; the stored endpoints are the clipped ones.  The
     * clearing step uses the same offsets, which keeps detection and
     * remedy consistent at any coordinate scale. */
    std::vector<Obstacle> obstructions(VertexId v, int k) const {
        Pt o = coords_[v];
        double cot = ray_cot(k);
        auto off = [&](Pt p) { return p.x - (o.x + (p.y - o.y) * cot); };
        std::vector<Obstacle> out;
        for (EdgeId e = 0; e < (EdgeId)g.edges.size(); ++e) {
            const auto& pl = poly_[e];
            for (int i = 0; i + 1 < (int)pl.size(); ++i) {
                Pt A = pl[i], B = pl[i + 1];
                /* segments ending exactly at the origin are the rays and
                 * path edges already incident to v */
                if ((A.x == o.x && A.y == o.y) || (B.x == o.x && B.y == o.y)) continue;
                if (A.y > B.y) std::swap(A, B);
                if (B.y < o.y) continue;
                if (A.y < o.y) {
                    double f = (o.y - A.y) / (B.y - A.y);
                    A = {A.x + f * (B.x - A.x), o.y};
                }
                double sa = off(A), sb = off(B);
                if (std::min(sa, sb) < 0.5 && std::max(sa, sb) > -0.5)
                    out.push_back({A, B, e, i, std::min(sa, sb) <= 0 && std::max(sa, sb) >= 0});
            }
        }
        return out;
    }

    /* stretch left and/or right of u until the ray along slope k is free of
     * crossings (the margin keeps later intersections comfortable) */
    bool clear_ray(VertexId u, int k) {
        /* each round strictly separates every current obstacle from the
         * ray, and the ray only ever moves right relative to the static
         * part, so the rounds are bounded by the number of segments */
        int limit = 3 * (int)g.edges.size() + 16;
        bool moved = false;
        for (int iter = 0; iter < limit; ++iter) {
            auto obs = obstructions(u, k);
            if (obs.empty()) return moved;
            int pu = path_pos_[u];
            auto mv_r = move_set(pu + 1); /* cut (u, succ(u)): moves scenery right of the ray */
            auto mv_l = move_set(pu);     /* cut (pred(u), u): moves the ray itself */
            double lam_l = 0, lam_r = 0;
            Pt o = coords_[u];
            double cot = ray_cot(k);
            auto rayx = [&](double y) { return o.x + (y - o.y) * cot; };
            for (const Obstacle& ob : obs) {
                bool ar = point_moves(ob.e, ob.seg, mv_r);
                bool br = point_moves(ob.e, ob.seg + 1, mv_r);
                bool al = point_moves(ob.e, ob.seg, mv_l);
                bool bl = point_moves(ob.e, ob.seg + 1, mv_l);
                /* a segment is separable only when both endpoints move with
                 * the right cut, or neither moves with the left cut (points
                 * in between ride along with the ray and keep their offset
                 * under either stretch); tolerate an inseparable segment
                 * while it merely comes close without crossing */
                if (ob.crossing && !((ar && br) || (!al && !bl)))
                    throw internal_error("ray obstruction straddles the clearing cut");
                if (ar) lam_r = std::max(lam_r, rayx(ob.a.y) - ob.a.x + 1);
                else if (!al) lam_l = std::max(lam_l, ob.a.x - rayx(ob.a.y) + 1);
                if (br) lam_r = std::max(lam_r, rayx(ob.b.y) - ob.b.x + 1);
                else if (!bl) lam_l = std::max(lam_l, ob.b.x - rayx(ob.b.y) + 1);
            }
            if (lam_l <= 0 && lam_r <= 0) return moved; /* only tolerated near-misses left */
            if (lam_l > 0) {
                if (pu == 0) throw internal_error("cannot clear a ray at the left pole leftwards");
                stretch(pu, lam_l);
            }
            if (lam_r > 0) {
                if (pu == (int)path_.size() - 1)
                    throw internal_error("cannot clear a ray at the right pole rightwards");
                stretch(pu + 1, lam_r);
            }
            moved = true;
        }
        throw internal_error("ray clearing did not converge at vertex " + g.names[u]);
    }

    void snapshot() {
        if (!trace) return;
        StepSnapshot s;
        s.step = 0;
        for (char p : placed_) s.step += p;
        s.outer_path = path_;
        s.outer_path_edges = path_edges_;
        s.placed = placed_;
        s.coords = coords_;
        s.polylines = poly_;
        steps_.push_back(std::move(s));
    }

    void draw_base() {
        for (int i = 0; i < 4; ++i) {
            VertexId v = aug.base_path[i];
            coords_[v] = {(double)i, 0.0};
            placed_[v] = 1;
        }
        for (int i = 0; i < 3; ++i) {
            EdgeId e = aug.base_path_edges[i];
            poly_[e] = {coords_[g.edges[e].tail], coords_[g.edges[e].head]};
            VertexId lft = aug.base_path[i], rgt = aug.base_path[i + 1];
            hright_used_[lft] = 1;
            hleft_used_[rgt] = 1;
        }
        path_.assign(aug.base_path.begin(), aug.base_path.end());
        path_edges_.assign(aug.base_path_edges.begin(), aug.base_path_edges.end());
        rebuild_path_pos();
        snapshot();
    }

    /* attach vi above the contiguous outer-path vertices us (left to right) */
    void attach(VertexId vi, const std::vector<std::pair<VertexId, EdgeId>>& us) {
        const int q = (int)us.size();
        if (q < 2) throw internal_error("attachment with fewer than two predecessors");
        for (int j = 0; j + 1 < q; ++j)
            if (path_pos_[us[j + 1].first] != path_pos_[us[j].first] + 1)
                throw internal_error("attachment predecessors not contiguous on the outer path");

        std::vector<char> want_real(q);
        for (int j = 0; j < q; ++j) {
            if (removed_[us[j].second]) throw internal_error("attachment through a withheld edge");
            want_real[j] = g.edges[us[j].second].kind != EdgeKind::Dummy;
        }

        /* bottom rays at vi for the middle edges, left to right */
        std::vector<int> bk(q, -1);
        int prev = 0;
        for (int j = 1; j + 1 < q; ++j) {
            int found = -1;
            for (int k = prev + 1; k < K; ++k)
                if (ext.real_flag[k] == (bool)want_real[j]) { found = k; break; }
            if (found < 0)
                throw internal_error("missing bottom ray at vertex " + g.names[vi]);
            bk[j] = found;
            prev = found;
        }

        /* top rays at the predecessors */
        std::vector<int> tk(q, -1);
        tk[0] = pick_top(us[0].first, want_real[0], /*ccw=*/true, us[0].second);
        tk[q - 1] = pick_top(us[q - 1].first, want_real[q - 1], /*ccw=*/false, us[q - 1].second);
        for (int j = 1; j + 1 < q; ++j) {
            EdgeKind kind = g.edges[us[j].second].kind;
            if (kind == EdgeKind::UpperStub) {
                /* a straight segment: same slope below vi and above u_j */
                int k = bk[j];
                if (top_used_[us[j].first][k] || !outer_top(us[j].first, k))
                    throw internal_error("stub slope unavailable at vertex " + g.names[us[j].first]);
                tk[j] = k;
            } else {
                tk[j] = pick_top(us[j].first, want_real[j], /*ccw=*/false, us[j].second);
            }
        }
        if (g.edges[us[0].second].kind == EdgeKind::UpperStub ||
            g.edges[us[q - 1].second].kind == EdgeKind::UpperStub)
            throw internal_error("upper stub at an extreme incoming position");

        /* make every chosen ray crossing-free; clearing one may shift the
         * scenery of another, so sweep until stable */
        for (int pass = 0;; ++pass) {
            bool any = false;
            for (int j = 0; j < q; ++j)
                if (clear_ray(us[j].first, tk[j])) any = true;
            if (!any) break;
            if (pass >= 40) throw internal_error("ray clearing oscillates");
        }

        /* the bend line only has to clear the corridor the new edges live
         * in: the wedge between the cleared extreme rays, whose floor is
         * the predecessors and the path edges between them; staying local
         * keeps tall features elsewhere from inflating every attachment */
        double Y = 0;
        for (int j = 0; j < q; ++j) Y = std::max(Y, coords_[us[j].first].y);
        for (int j = 0; j + 1 < q; ++j)
            for (const Pt& pt : poly_[path_edges_[path_pos_[us[j].first]]])
                Y = std::max(Y, pt.y);
        Y += 1;
        auto px = [&](int j) { return ray_x(us[j].first, tk[j], Y); };

        /* left-to-right order of the ray crossings with the line at Y */
        for (int j = 0; j + 1 < q; ++j) {
            double a = px(j), b = px(j + 1);
            if (b < a + 1) stretch(path_pos_[us[j + 1].first], a + 1 - b);
        }

        /* revisit the bottom-ray assignment now that the crossing points
         * are known: spreading the slots so no pair of consecutive middles
         * has a large gap squeezed into a small cotangent difference keeps
         * the attachment height, and with it coordinate growth, low */
        if (q > 4) {
            auto slot_ok = [&](int j, int k) {
                if (g.edges[us[j].second].kind == EdgeKind::UpperStub) return k == bk[j];
                return (bool)ext.real_flag[k] == (bool)want_real[j];
            };
            const double kInf = 1e300;
            std::vector<std::vector<double>> f(q, std::vector<double>(K, kInf));
            std::vector<std::vector<int>> from(q, std::vector<int>(K, -1));
            for (int k = 1; k < K; ++k)
                if (slot_ok(1, k)) f[1][k] = 0;
            for (int j = 2; j + 1 < q; ++j) {
                double gap = std::max(1.0, px(j) - px(j - 1));
                for (int k = 2; k < K; ++k) {
                    if (!slot_ok(j, k)) continue;
                    for (int k2 = 1; k2 < k; ++k2) {
                        if (f[j - 1][k2] >= kInf) continue;
                        double db = ray_cot(k2) - ray_cot(k);
                        if (db <= 0) continue;
                        double c = std::max(f[j - 1][k2], gap / db);
                        if (c < f[j][k]) { f[j][k] = c; from[j][k] = k2; }
                    }
                }
            }
            int best = -1;
            for (int k = 1; k < K; ++k)
                if (f[q - 2][k] < (best < 0 ? kInf : f[q - 2][best])) best = k;
            if (best >= 0) {
                for (int j = q - 2; j >= 1; --j) { bk[j] = best; best = from[j][best]; }
            }
        }

        std::vector<double> B(q, 0);
        for (int j = 1; j + 1 < q; ++j) B[j] = ray_cot(bk[j]);

        /* pick the height above the bend line just large enough that (a)
         * consecutive bends end up at least one unit apart and (b) every
         * middle predecessor slides right (never left) when its ray
         * crossing is aligned with the matching bend; keeping the height
         * minimal keeps coordinate growth in check */
        double h = 2;
        for (int j = 1; j + 2 < q; ++j) {
            double gap = B[j] - B[j + 1];
            if (gap <= 0) throw internal_error("bottom rays out of order");
            h = std::max(h, 1 / gap + 1);
            if (j >= 1)
                h = std::max(h, (px(j + 1) - px(j)) / gap + 1);
        }
        double yv = Y + h;
        double xb1 = ray_x(us[0].first, tk[0], yv);
        double xv = xb1 + 1;
        if (q > 2) xv = std::max(xv, px(1) + h * B[1] + 1);

        /* slide each middle predecessor so its ray meets the line at the
         * point below the matching bottom ray of vi */
        for (int j = 1; j + 1 < q; ++j) {
            double target = xv - h * B[j];
            double lam = target - px(j);
            /* rounding at large coordinates can leave a tiny deficit */
            double tol = 1e-9 * std::max(1.0, std::abs(target));
            if (lam < -tol) throw internal_error("negative alignment stretch");
            if (lam > 1e-12) stretch(path_pos_[us[j].first], lam);
        }
        /* the rightmost ray must pass vi on its right at vi's height, and
         * stay right of the last middle bend at the bend line */
        {
            double xbq = ray_x(us[q - 1].first, tk[q - 1], yv);
            double need = xv + 1 - xbq;
            if (q > 2)
                need = std::max(need, (xv - h * B[q - 2]) + 1 - ray_x(us[q - 1].first, tk[q - 1], Y));
            if (need > 0) stretch(path_pos_[us[q - 1].first], need);
        }

        coords_[vi] = {xv, yv};
        placed_[vi] = 1;

        {
            EdgeId e = us[0].second;
            Pt bend{ray_x(us[0].first, tk[0], yv), yv};
            poly_[e] = {coords_[us[0].first], bend, coords_[vi]};
            top_used_[us[0].first][tk[0]] = 1;
            hleft_used_[vi] = 1;
        }
        for (int j = 1; j + 1 < q; ++j) {
            EdgeId e = us[j].second;
            if (tk[j] == bk[j]) {
                poly_[e] = {coords_[us[j].first], coords_[vi]};
            } else {
                Pt bend{xv - h * B[j], Y};
                poly_[e] = {coords_[us[j].first], bend, coords_[vi]};
            }
            top_used_[us[j].first][tk[j]] = 1;
            bot_used_[vi][bk[j]] = 1;
        }
        {
            EdgeId e = us[q - 1].second;
            Pt bend{ray_x(us[q - 1].first, tk[q - 1], yv), yv};
            poly_[e] = {coords_[us[q - 1].first], bend, coords_[vi]};
            top_used_[us[q - 1].first][tk[q - 1]] = 1;
            hright_used_[vi] = 1;
        }

        int a = path_pos_[us[0].first];
        for (int j = 1; j + 1 < q; ++j) cover_[us[j].first] = vi;
        std::vector<VertexId> nv(path_.begin(), path_.begin() + a + 1);
        std::vector<EdgeId> ne(path_edges_.begin(), path_edges_.begin() + a);
        nv.push_back(vi);
        ne.push_back(us[0].second);
        ne.push_back(us[q - 1].second);
        nv.insert(nv.end(), path_.begin() + a + q - 1, path_.end());
        ne.insert(ne.end(), path_edges_.begin() + a + q - 1, path_edges_.end());
        path_ = std::move(nv);
        path_edges_ = std::move(ne);
        rebuild_path_pos();
        snapshot();
    }

    void add_vertex(VertexId vi) {
        std::vector<std::pair<VertexId, EdgeId>> us;
        for (EdgeId e : g.rotation[vi])
            if (g.edges[e].head == vi) {
                VertexId u = g.edges[e].tail;
                if (!placed_[u] || path_pos_[u] < 0)
                    throw internal_error("predecessor not on the outer path");
                us.push_back({u, e});
            }
        std::sort(us.begin(), us.end(), [&](const auto& x, const auto& y) {
            return path_pos_[x.first] < path_pos_[y.first];
        });
        attach(vi, us);
    }

    void place_last(VertexId vn) {
        std::vector<std::pair<VertexId, EdgeId>> full;
        for (VertexId w : path_) {
            EdgeId found = -1;
            for (EdgeId e : g.rotation[w])
                if (g.edges[e].tail == w && g.edges[e].head == vn && !removed_[e]) found = e;
            if (found < 0)
                throw internal_error("outer-path vertex not adjacent to the last vertex");
            full.push_back({w, found});
        }
        int j0 = -1;
        for (int j = 0; j < (int)full.size(); ++j)
            if (g.edges[full[j].second].kind != EdgeKind::Dummy) { j0 = j; break; }
        if (j0 < 0 || j0 + 1 >= (int)full.size())
            throw internal_error("last vertex lacks a usable real predecessor");
        /* dummy edges left of the first real one stay undrawn */
        attach(vn, {full.begin() + j0, full.end()});
    }

    AugmentedDrawing run() {
        draw_base();
        for (int idx = 4; idx < (int)aug.chi.size(); ++idx) {
            VertexId vi = aug.chi[idx];
            if (idx + 1 == (int)aug.chi.size()) place_last(vi);
            else add_vertex(vi);
        }
        AugmentedDrawing out;
        out.coords = coords_;
        out.polylines = poly_;
        out.steps = std::move(steps_);
        return out;
    }
};

} // namespace

AugmentedDrawing draw_augmented(const CanonicalAugmentation& aug,
                                const ExtendedSlopeSet& slopes, bool trace) {
    Engine eng(aug, slopes, trace);
    return eng.run();
}

Drawing strip_dummies(const CanonicalAugmentation& aug, const AugmentedDrawing& ad) {
    Drawing d;
    for (VertexId v = 0; v < aug.orig_vertex_count; ++v)
        d.vertices.push_back({aug.g.names[v], ad.coords[v]});
    for (EdgeId e = 0; e < aug.orig_edge_count; ++e) {
        const Edge& ed = aug.g.edges[e];
        if (!ed.alive || ed.kind == EdgeKind::Dummy) continue;
        const auto& pl = ad.polylines[e];
        if (pl.size() < 2) throw internal_error("input edge left undrawn");
        Drawing::Edge de;
        de.tail = ed.tail;
        de.head = ed.head;
        de.bends.assign(pl.begin() + 1, pl.end() - 1);
        d.edges.push_back(std::move(de));
    }
    return d;
}

OneBendResult draw_1bend(const PlaneStGraph& g, const SlopeSet& s, const DrawOptions& opt) {
    Diagnostics diag = validate(g);
    if (!diag.ok()) throw input_error("invalid graph: " + diag.first_failure());
    if (g.max_degree() > (int)s.angles.size())
        throw input_error("maximum degree exceeds the number of slopes");

    OneBendResult res;
    if (g.n() == 2) {
        res.drawing.vertices.push_back({g.names[g.source], {0, 0}});
        res.drawing.vertices.push_back({g.names[g.sink], {std::cos(s.angles[1]), std::sin(s.angles[1])}});
        res.drawing.edges.push_back({0, 1, {}});
        res.slopes = extend(s, 1);
        return res;
    }
    if (g.degree(g.sink) < 2)
        throw input_error("the sink needs at least two incident edges for this construction");

    auto ord = bitonic_order(g);
    if (std::holds_alternative<ForbiddenConfig>(ord))
        throw input_error("graph admits no bitonic ordering; use the 2-bend pipeline");
    const StOrdering& sigma = std::get<StOrdering>(ord);

    res.aug = canonical_augment(g, sigma);
    triangulate(res.aug);
    Diagnostics cert = verify_upward_canonical(res.aug);
    if (!cert.ok()) throw internal_error("augmentation certificate failed: " + cert.first_failure());

    res.slopes = extend(s, delta_star(res.aug));
    res.aug_drawing = draw_augmented(res.aug, res.slopes, opt.trace);
    res.drawing = strip_dummies(res.aug, res.aug_drawing);
    if (opt.strict_eps > 0) res.drawing = make_strict(res.drawing, opt.strict_eps);
    return res;
}

PlaneStGraph reroute_deg3(const PlaneStGraph& g) {
    Diagnostics diag = validate(g);
    if (!diag.ok()) throw input_error("invalid graph: " + diag.first_failure());
    if (g.max_degree() > 3) throw input_error("rerouting applies to maximum degree 3 only");

    auto ord = bitonic_order(g);
    if (std::holds_alternative<StOrdering>(ord)) return g;
    const ForbiddenConfig& fc = std::get<ForbiddenConfig>(ord);
    if (fc.u != g.source)
        throw internal_error("obstruction away from the source in a degree-3 graph");

    EdgeId est = -1;
    for (EdgeId e : g.rotation[g.source])
        if (g.edges[e].tail == g.source && g.edges[e].head == g.sink) est = e;
    if (est < 0)
        throw input_error("no source-to-sink edge: the degree-3 rerouting does not apply");

    auto succ = successors_cw(g, g.source);
    bool was_first = (succ.front() == g.sink);

    /* carry (s,t) across the outer face to the other side of both fans; the
     * list position at the sink mirrors the one at the source, since the
     * moved edge runs along one outer flank end to end */
    PlaneStGraph h = g;
    auto& rs = h.rotation[h.source];
    rs.erase(std::remove(rs.begin(), rs.end(), est), rs.end());
    auto& rt = h.rotation[h.sink];
    rt.erase(std::remove(rt.begin(), rt.end(), est), rt.end());
    if (was_first) {
        rs.push_back(est);
        rt.insert(rt.begin(), est);
    } else {
        rs.insert(rs.begin(), est);
        rt.push_back(est);
    }
    /* the moved edge now borders the outer face: pick the face holding
     * the whole walk as the declared outer boundary */
    h.outer_hint.clear();
    FaceList fl = faces(h);
    for (const Face& f : fl.faces) {
        bool has_est = false, has_s = false, has_t = false;
        for (Dart dd : f.darts) {
            has_est |= dd.edge == est;
            has_s |= h.dart_tail(dd) == h.source;
            has_t |= h.dart_tail(dd) == h.sink;
        }
        if (has_est && has_s && has_t) {
            for (Dart dd : f.darts) h.outer_hint.push_back(dd.edge);
            break;
        }
    }
    if (!validate(h).ok())
        throw internal_error("rerouting produced an invalid embedding");
    if (!std::holds_alternative<StOrdering>(bitonic_order(h)))
        throw internal_error("rerouting failed to produce a bitonic embedding");
    return h;
}

namespace {

Pt shear_pt(Pt p, double s, double xmin) { return {p.x, p.y + s * (p.x - xmin)}; }

/* intersection of lines through a and b with direction da, db */
bool line_isect(Pt a, Pt da, Pt b, Pt db, Pt& out) {
    double den = cross(da, db);
    if (std::abs(den) < 1e-15) return false;
    double t = cross(b - a, db) / den;
    out = {a.x + t * da.x, a.y + t * da.y};
    return true;
}

} // namespace

Drawing make_strict(const Drawing& d, double eps) {
    if (eps <= 0) throw input_error("strictness slope must be positive");

    double xmin = 0;
    bool first = true;
    for (const auto& v : d.vertices) {
        if (first || v.pos.x < xmin) xmin = v.pos.x;
        first = false;
    }

    /* shear sign: straight horizontal edges can only tilt with the plane,
     * so the plane must tilt the way they point */
    double sign = 0;
    for (const auto& e : d.edges) {
        if (!e.bends.empty()) continue;
        Pt a = d.vertices[e.tail].pos, b = d.vertices[e.head].pos;
        if (std::abs(b.y - a.y) < 1e-12 && std::abs(b.x - a.x) > 1e-12)
            sign = (b.x > a.x) ? 1 : -1;
    }
    if (sign == 0) sign = 1;

    for (int iter = 0; iter < 40; ++iter, eps /= 2) {
        double s = sign * eps;
        Drawing c = d;
        for (auto& v : c.vertices) v.pos = shear_pt(v.pos, s, xmin);
        bool bad = false;
        for (int ei = 0; ei < (int)d.edges.size() && !bad; ++ei) {
            const auto& e = d.edges[ei];
            if (e.bends.empty()) continue;
            if (e.bends.size() > 1) throw input_error("more than one bend per edge");
            Pt t0 = d.vertices[e.tail].pos, h0 = d.vertices[e.head].pos, b0 = e.bends[0];
            /* horizontal segments tilt by their polyline orientation, others
             * keep their direction exactly */
            auto desired = [&](Pt from, Pt to) -> Pt {
                Pt dd = to - from;
                if (std::abs(dd.y) < 1e-12) return Pt{dd.x >= 0 ? 1.0 : -1.0, eps};
                return dd;
            };
            Pt da = desired(t0, b0);
            Pt db = desired(b0, h0);
            Pt nb;
            if (!line_isect(c.vertices[e.tail].pos, da, c.vertices[e.head].pos, db, nb)) {
                bad = true;
                break;
            }
            c.edges[ei].bends[0] = nb;
        }
        if (bad) continue;
        DrawingReport rep = check(c, nullptr, /*strict=*/true, 1e-6);
        if (rep.planar && rep.upward_strict) return c;
    }
    throw internal_error("strict transform failed numerically");
}

} // namespace updraw
