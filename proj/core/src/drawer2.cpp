#include "updraw/drawer2.hpp"

#include <cmath>

#include <algorithm>
#include <map>

namespace updraw {

namespace {

/* polyline of an original edge: its lower stub, the subdivision point, and
 * the (possibly further subdivided) upper stub */
void expand_edge(EdgeId e, const std::map<EdgeId, const SubdivisionRecord*>& by_lower,
                 const AugmentedDrawing& ad, std::vector<Pt>& out) {
    const auto& pl = ad.polylines[e];
    if (pl.size() < 2) throw internal_error("subdivided edge part left undrawn");
    if (out.empty()) out.push_back(pl.front());
    out.insert(out.end(), pl.begin() + 1, pl.end());
    auto it = by_lower.find(e);
    if (it != by_lower.end()) expand_edge(it->second->upper, by_lower, ad, out);
}

int merge_collinear(std::vector<Pt>& pl) {
    std::vector<Pt> out;
    out.push_back(pl.front());
    for (size_t i = 1; i + 1 < pl.size(); ++i) {
        Pt u = pl[i] - out.back(), w = pl[i + 1] - pl[i];
        double n = std::abs(cross(u, w)) /
                   (std::hypot(u.x, u.y) * std::hypot(w.x, w.y) + 1e-300);
        if (n < 1e-9 && dot(u, w) > 0) continue;
        out.push_back(pl[i]);
    }
    out.push_back(pl.back());
    pl = out;
    return (int)pl.size() - 2;
}

} // namespace

TwoBendResult draw_2bend(const PlaneStGraph& g, const SlopeSet& s, const DrawOptions& opt) {
    Diagnostics diag = validate(g);
    if (!diag.ok()) throw input_error("invalid graph: " + diag.first_failure());
    if (g.max_degree() > (int)s.angles.size())
        throw input_error("maximum degree exceeds the number of slopes");

    TwoBendResult res;
    const int n = g.n();
    res.budget.bound = 4 * n - 9;

    /* bitonic inputs take the one-bend construction unchanged */
    if (g.n() == 2 || std::holds_alternative<StOrdering>(bitonic_order(g))) {
        OneBendResult one = draw_1bend(g, s, opt);
        res.drawing = std::move(one.drawing);
        res.aug = std::move(one.aug);
        res.slopes = std::move(one.slopes);
        res.aug_drawing = std::move(one.aug_drawing);
        res.sub.graph = g;
        for (const auto& e : res.drawing.edges)
            if (!e.bends.empty()) ++res.budget.m1;
        res.budget.total = res.budget.m1;
        res.budget.post_merge_total = res.budget.total;
        if (n >= 3 && res.budget.total > res.budget.bound)
            throw internal_error("bend budget exceeded");
        if (opt.strict_eps > 0) res.drawing = make_strict(res.drawing, opt.strict_eps);
        return res;
    }

    if (g.degree(g.sink) < 2)
        throw input_error("the sink needs at least two incident edges for this construction");

    res.sub = bitonic_subdivide(g);
    const PlaneStGraph& gs = res.sub.graph;
    auto ord = bitonic_order(gs);
    if (!std::holds_alternative<StOrdering>(ord))
        throw internal_error("subdivided graph is still not bitonic");

    res.aug = canonical_augment(gs, std::get<StOrdering>(ord));
    triangulate(res.aug);
    Diagnostics cert = verify_upward_canonical(res.aug);
    if (!cert.ok()) throw internal_error("augmentation certificate failed: " + cert.first_failure());

    res.slopes = extend(s, delta_star(res.aug));
    res.aug_drawing = draw_augmented(res.aug, res.slopes, opt.trace);

    std::map<EdgeId, const SubdivisionRecord*> by_lower;
    for (const auto& r : res.sub.splits) {
        by_lower[r.lower] = &r;
        if (res.aug_drawing.polylines[r.upper].size() != 2)
            throw internal_error("upper stub drawn with a bend");
    }

    for (VertexId v = 0; v < n; ++v)
        res.drawing.vertices.push_back({g.names[v], res.aug_drawing.coords[v]});
    int pre_merge = 0;
    for (EdgeId e = 0; e < (EdgeId)g.edges.size(); ++e) {
        std::vector<Pt> pl;
        expand_edge(e, by_lower, res.aug_drawing, pl);
        int bends = (int)pl.size() - 2;
        if (bends > 2) throw internal_error("edge exceeds two bends");
        pre_merge += bends;
        bool split = by_lower.count(e) > 0;
        if (split) ++res.budget.m2;
        else if (bends > 0) ++res.budget.m1;
        res.budget.post_merge_total += merge_collinear(pl);
        Drawing::Edge de;
        de.tail = g.edges[e].tail;
        de.head = g.edges[e].head;
        de.bends.assign(pl.begin() + 1, pl.end() - 1);
        res.drawing.edges.push_back(std::move(de));
    }
    res.budget.total = res.budget.m1 + 2 * res.budget.m2;
    if (res.budget.m2 > n - 3) throw internal_error("too many subdivided edges");
    if (pre_merge > res.budget.total) throw internal_error("bend accounting mismatch");
    if (res.budget.total > res.budget.bound) throw internal_error("bend budget exceeded");

    if (opt.strict_eps > 0)
        throw input_error("the strict transform supports one-bend drawings only");
    return res;
}

} // namespace updraw
