#include "updraw/generate.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "updraw/ordering.hpp"

namespace updraw {

namespace {

struct Pt2 {
    double x = 0, y = 0;
};

/* derive the clockwise rotations from a straight-line placement: clockwise
 * order around a vertex is decreasing direction angle */
void rotations_from_coords(PlaneStGraph& g, const std::vector<Pt2>& pos) {
    for (VertexId v = 0; v < g.n(); ++v) {
        auto& rot = g.rotation[v];
        std::stable_sort(rot.begin(), rot.end(), [&](EdgeId a, EdgeId b) {
            VertexId wa = g.other(a, v);
            VertexId wb = g.other(b, v);
            double aa = std::atan2(pos[wa].y - pos[v].y, pos[wa].x - pos[v].x);
            double ab = std::atan2(pos[wb].y - pos[v].y, pos[wb].x - pos[v].x);
            return aa > ab;
        });
    }
}

int index_in_rotation(const PlaneStGraph& g, VertexId v, EdgeId e) {
    const auto& rot = g.rotation[v];
    for (int i = 0; i < (int)rot.size(); ++i)
        if (rot[i] == e) return i;
    throw internal_error("generator lost track of a boundary edge");
}

/* incremental boundary-attachment builder.  The active boundary is a path
 * from vertex 0 (the source) to vertex 1; every new vertex is attached to a
 * contiguous stretch of it and replaces the covered interior. */
struct Builder {
    PlaneStGraph g;
    std::vector<VertexId> path;
    std::vector<EdgeId> bedge; /* bedge[j] joins path[j] and path[j+1] */

    int deg(VertexId v) const { return (int)g.rotation[v].size(); }

    /* attach vertex k to the listed path positions (increasing, at least
     * two); everything strictly between the first and last position leaves
     * the boundary and k takes its place.  Skipped vertices end up inside
     * the enclosed region, which is fine as long as they already have an
     * outgoing edge. */
    void attach(VertexId k, const std::vector<int>& js) {
        int a = js.front(), b = js.back();
        std::vector<EdgeId> es;
        for (int j : js) {
            VertexId u = path[j];
            EdgeId e = (EdgeId)g.edges.size();
            g.edges.push_back({u, k, EdgeKind::Real, true});
            auto& ru = g.rotation[u];
            if (j == a) {
                ru.insert(ru.begin() + index_in_rotation(g, u, bedge[a]), e);
            } else {
                ru.insert(ru.begin() + index_in_rotation(g, u, bedge[j - 1]) + 1, e);
            }
            es.push_back(e);
        }
        for (int j = (int)es.size() - 1; j >= 0; --j) g.rotation[k].push_back(es[j]);

        std::vector<VertexId> np(path.begin(), path.begin() + a + 1);
        np.push_back(k);
        np.insert(np.end(), path.begin() + b, path.end());
        std::vector<EdgeId> nb(bedge.begin(), bedge.begin() + a);
        nb.push_back(es.front());
        nb.push_back(es.back());
        nb.insert(nb.end(), bedge.begin() + b, bedge.end());
        path = std::move(np);
        bedge = std::move(nb);
    }

    void attach(VertexId k, int a, int b) {
        std::vector<int> js(b - a + 1);
        for (int j = a; j <= b; ++j) js[j - a] = j;
        attach(k, js);
    }
};

PlaneStGraph try_random_st(int n, int m, std::mt19937_64& rng, int dmax, bool& ok) {
    ok = false;
    Builder b;
    for (int i = 0; i < n; ++i) b.g.add_vertex("v" + std::to_string(i));
    b.g.source = 0;
    b.g.sink = n - 1;

    EdgeId e0 = b.g.add_edge(0, 1);
    b.path = {0, 1};
    b.bedge = {e0};

    /* covering a vertex gives it an outgoing edge, after which it can sit
     * on the boundary fully saturated, so the covered side caps at dmax */
    auto interval_ok = [&](int a, int q) {
        int L = (int)b.path.size();
        int bb = a + q - 1;
        if (bb >= L) return false;
        for (int j = a; j <= bb; ++j)
            if (b.deg(b.path[j]) + 1 > dmax) return false;
        return true;
    };

    auto out_deg = [&](VertexId v) {
        int o = 0;
        for (EdgeId e : b.g.rotation[v])
            if (b.g.edges[e].tail == v) ++o;
        return o;
    };

    /* every attachment hands an outgoing edge to each covered boundary
     * vertex, so a vertex still lacking one must be covered later; the
     * sink absorbs whatever stretch of uncovered vertices remains.  Keep
     * those stretches coverable by preferring intervals that pick up a
     * source-only vertex whenever more than one is waiting. */
    for (VertexId k = 2; k < n - 1; ++k) {
        int L = (int)b.path.size();
        std::vector<int> zpos;
        for (int j = 1; j < L; ++j)
            if (out_deg(b.path[j]) == 0) zpos.push_back(j);

        /* a window that covers a waiting vertex leaves the new vertex in
         * its place, so the waiting set can only shrink when one window
         * swallows several of them; steer the survivors together by
         * minimising their spread after the attach */
        std::vector<std::pair<int, int>> feasible; /* (a, q) */
        std::vector<std::pair<int, int>> rescuing;
        long best_score = LONG_MAX;
        for (int q = 2; q <= std::min(L, dmax - 1); ++q)
            for (int a = 0; a + q - 1 < L; ++a) {
                if (!interval_ok(a, q)) continue;
                feasible.push_back({a, q});
                int bb = a + q - 1;
                bool hits = false;
                int lo = a + 1, hi = a + 1; /* the new vertex is a waiter */
                for (int j : zpos) {
                    if (j >= a && j <= bb) {
                        hits = true;
                        continue;
                    }
                    int nj = j < a ? j : j - bb + a + 1;
                    lo = std::min(lo, nj);
                    hi = std::max(hi, nj);
                }
                if (!hits) continue;
                long score = hi - lo;
                if (score < best_score) {
                    best_score = score;
                    rescuing.clear();
                }
                if (score == best_score) rescuing.push_back({a, q});
            }
        if (feasible.empty()) return b.g;

        std::vector<std::pair<int, int>> pool;
        if (!rescuing.empty() && (int)zpos.size() > 1 && ((int)zpos.size() >= dmax - 1 || (rng() & 1))) {
            pool = rescuing;
        } else {
            /* favour growth, with a sprinkle of wider intervals */
            int want_q = (rng() % 4) ? 2 : 2 + (int)(rng() % (std::uint64_t)std::max(1, dmax - 2));
            for (auto& c : feasible)
                if (c.second == want_q) pool.push_back(c);
        }
        if (pool.empty()) pool = feasible;
        auto [a, q] = pool[rng() % pool.size()];
        b.attach(k, a, a + q - 1);
    }

    /* the sink picks up exactly the boundary vertices that still lack an
     * outgoing edge, plus extra positions while its degree allows */
    if (n >= 3) {
        int L = (int)b.path.size();
        std::vector<int> js;
        for (int j = 1; j < L; ++j)
            if (out_deg(b.path[j]) == 0) js.push_back(j);
        if ((int)js.size() > dmax) return b.g;
        for (int j : js)
            if (b.deg(b.path[j]) + 1 > dmax) return b.g;
        if ((int)js.size() < 2) {
            std::vector<int> spare;
            for (int j = 0; j < L; ++j)
                if (b.deg(b.path[j]) + 1 <= dmax && out_deg(b.path[j]) > 0) spare.push_back(j);
            std::shuffle(spare.begin(), spare.end(), rng);
            while ((int)js.size() < 2 && !spare.empty()) {
                js.push_back(spare.back());
                spare.pop_back();
            }
            std::sort(js.begin(), js.end());
            if ((int)js.size() < 2) return b.g;
        }
        b.attach(n - 1, js);
    }

    /* the outer boundary is the bottom edge plus the remaining path */
    b.g.outer_hint = {e0};
    for (EdgeId e : b.bedge) b.g.outer_hint.push_back(e);

    /* trim down to roughly m edges; keep the outer boundary and keep every
     * vertex with at least one incoming and one outgoing edge */
    std::vector<char> on_outer(b.g.edges.size(), 0);
    for (EdgeId e : b.g.outer_hint) on_outer[e] = 1;
    auto in_out = [&](VertexId v) {
        int in = 0, out = 0;
        for (EdgeId e : b.g.rotation[v])
            (b.g.edges[e].head == v ? in : out)++;
        return std::pair<int, int>(in, out);
    };
    while (b.g.m() > m) {
        std::vector<EdgeId> cand;
        for (EdgeId e = 0; e < (EdgeId)b.g.edges.size(); ++e) {
            if (!b.g.edges[e].alive || on_outer[e]) continue;
            auto [ti, to] = in_out(b.g.edges[e].tail);
            auto [hi, ho] = in_out(b.g.edges[e].head);
            if (to >= 2 && hi >= 2) cand.push_back(e);
        }
        if (cand.empty()) break;
        b.g.remove_edge(cand[rng() % cand.size()]);
    }

    ok = true;
    return b.g;
}

} // namespace

PlaneStGraph gen_fan(int delta) {
    if (delta < 2) throw input_error("fan graphs need degree at least 2");
    PlaneStGraph g;
    std::vector<Pt2> pos;
    VertexId s = g.add_vertex("s");
    pos.push_back({0, 0});
    for (int i = 1; i <= delta; ++i) {
        g.add_vertex("w" + std::to_string(i));
        pos.push_back({(double)(delta + 1 - i), (double)i});
    }
    for (int i = 1; i <= delta; ++i) g.add_edge(s, i);
    for (int i = 1; i < delta; ++i) g.add_edge(i, i + 1);
    rotations_from_coords(g, pos);
    g.source = s;
    g.sink = delta;
    g.outer_hint = {delta - 1}; /* (s, w_delta), the right outer boundary */
    return g;
}

PlaneStGraph gen_nonbitonic_witness() {
    PlaneStGraph g;
    std::vector<Pt2> pos = {{0, 0}, {-2, 2}, {-1, 2}, {1, 2}, {2, 2}, {0, 4}};
    g.add_vertex("s");
    for (int i = 1; i <= 4; ++i) g.add_vertex("v" + std::to_string(i));
    g.add_vertex("t");
    VertexId s = 0, v1 = 1, v2 = 2, v3 = 3, v4 = 4, t = 5;
    g.add_edge(s, v1);
    g.add_edge(s, v2);
    g.add_edge(s, v3);
    EdgeId e_sv4 = g.add_edge(s, v4);
    g.add_edge(v2, v1);
    g.add_edge(v3, v4);
    g.add_edge(v1, t);
    g.add_edge(v4, t);
    rotations_from_coords(g, pos);
    g.source = s;
    g.sink = t;
    g.outer_hint = {e_sv4}; /* right outer boundary */
    return g;
}

PlaneStGraph gen_fig3() {
    PlaneStGraph g;
    std::vector<Pt2> pos = {{0, 0}, {-2, 1}, {0, 1}, {2, 1},
                            {-1, 2}, {1, 2}, {0, 3}, {1, 4}};
    for (int i = 1; i <= 8; ++i) g.add_vertex("v" + std::to_string(i));
    VertexId v1 = 0, v2 = 1, v3 = 2, v4 = 3, v5 = 4, v6 = 5, v7 = 6, v8 = 7;
    g.add_edge(v1, v2);
    g.add_edge(v1, v3);
    g.add_edge(v1, v4);
    g.add_edge(v2, v5);
    g.add_edge(v3, v5);
    g.add_edge(v3, v6);
    g.add_edge(v4, v6);
    g.add_edge(v4, v8);
    g.add_edge(v5, v7);
    g.add_edge(v6, v7);
    g.add_edge(v7, v8);
    rotations_from_coords(g, pos);
    g.source = v1;
    g.sink = v8;
    return g;
}

PlaneStGraph gen_random_st(int n, int m, std::uint64_t seed, int dmax) {
    if (n < 2) throw input_error("random graphs need at least 2 vertices");
    if (dmax < 4) throw input_error("the random generator needs a degree cap of at least 4");
    if (n == 2) {
        PlaneStGraph g;
        g.add_vertex("v0");
        g.add_vertex("v1");
        g.add_edge(0, 1);
        g.source = 0;
        g.sink = 1;
        return g;
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (std::uint64_t)attempt);
        bool ok = false;
        PlaneStGraph g = try_random_st(n, m, rng, dmax, ok);
        if (ok && validate(g).ok()) return g;
    }
    throw internal_error("random st-graph generation did not converge");
}

PlaneStGraph gen_random_nonbitonic(int n, int m, std::uint64_t seed, int dmax) {
    if (n < 8) throw input_error("the random non-bitonic family starts at 8 vertices");
    for (int attempt = 0; attempt < 64; ++attempt) {
        PlaneStGraph g = gen_random_st(n - 2, std::max(n - 2, m - 6),
                                       seed + 0x51ed2701u * (std::uint64_t)attempt, dmax);

        /* extreme source-to-sink paths along the outer boundary */
        auto flank = [&](bool leftmost) {
            std::vector<VertexId> p{g.source};
            VertexId v = g.source;
            while (v != g.sink) {
                auto outs = out_edges_cw(g, v);
                if (outs.empty()) return std::vector<VertexId>{};
                v = g.edges[leftmost ? outs.front() : outs.back()].head;
                p.push_back(v);
            }
            return p;
        };
        auto lp = flank(true), rp = flank(false);
        if (lp.size() < 3 || rp.size() < 3 || lp[1] == rp[1]) continue;

        auto in_block = [&](VertexId v) {
            const auto& rot = g.rotation[v];
            int k = (int)rot.size();
            auto is_in = [&](int i) { return g.edges[rot[i]].head == v; };
            int start = 0;
            for (int i = 0; i < k; ++i)
                if (is_in(i) && !is_in((i + k - 1) % k)) {
                    start = i;
                    break;
                }
            int len = 0;
            while (len < k && is_in((start + len) % k)) ++len;
            return std::pair<int, int>(start, len);
        };
        auto out_block = [&](VertexId v) {
            const auto& rot = g.rotation[v];
            int k = (int)rot.size();
            auto is_out = [&](int i) { return g.edges[rot[i]].tail == v; };
            int start = 0;
            for (int i = 0; i < k; ++i)
                if (is_out(i) && !is_out((i + k - 1) % k)) {
                    start = i;
                    break;
                }
            int len = 0;
            while (len < k && is_out((start + len) % k)) ++len;
            return std::pair<int, int>(start, len);
        };
        auto push_edge = [&](VertexId u, VertexId v) {
            EdgeId e = (EdgeId)g.edges.size();
            g.edges.push_back({u, v, EdgeKind::Real, true});
            return e;
        };
        auto splice = [&](VertexId v, int idx, EdgeId e) {
            g.rotation[v].insert(g.rotation[v].begin() + idx, e);
        };

        /* left flank: s -> p as the new leftmost successor, fed back from l1
         * so the first successor pair forces a decrease */
        VertexId l1 = lp[1], l2 = lp[2], r1 = rp[1], r2 = rp[2];
        VertexId p = g.add_vertex("p");
        EdgeId ep1 = push_edge(g.source, p);
        EdgeId ep2 = push_edge(l1, p);
        EdgeId ep3 = push_edge(p, l2);
        g.rotation[p] = {ep3, ep2, ep1};
        splice(g.source, 0, ep1);
        splice(l1, out_block(l1).first, ep2);
        {
            auto [st, len] = in_block(l2);
            int k = (int)g.rotation[l2].size();
            splice(l2, st + len <= k ? st + len : (st + len) % k, ep3);
        }

        /* right flank: s -> q as the new rightmost successor, fed from r1 so
         * the last successor pair forces an increase */
        VertexId q = g.add_vertex("q");
        EdgeId eq1 = push_edge(g.source, q);
        EdgeId eq2 = push_edge(r1, q);
        EdgeId eq3 = push_edge(q, r2);
        g.rotation[q] = {eq3, eq1, eq2};
        g.rotation[g.source].push_back(eq1);
        {
            auto [st, len] = out_block(r1);
            int k = (int)g.rotation[r1].size();
            splice(r1, st + len <= k ? st + len : (st + len) % k, eq2);
        }
        splice(r2, in_block(r2).first, eq3);

        /* the outer walk runs clockwise and crosses (s,q) downwards */
        g.outer_hint = {eq1};
        if (!validate(g).ok()) continue;
        if (std::holds_alternative<StOrdering>(bitonic_order(g))) continue;
        return g;
    }
    throw internal_error("random non-bitonic generation did not converge");
}

PlaneStGraph gen_cubic_nonbitonic(int n, std::uint64_t seed) {
    if (n < 4) throw input_error("the degree-3 family starts at 4 vertices");
    PlaneStGraph g;
    std::vector<Pt2> pos = {{0, 0}, {-2, 2}, {0, 1}, {2, 3}};
    g.add_vertex("s");
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_vertex("t");
    VertexId s = 0, a = 1, b = 2, t = 3;
    g.add_edge(s, a);
    g.add_edge(s, b);
    EdgeId est = g.add_edge(s, t);
    g.add_edge(b, a);
    g.add_edge(a, t);
    rotations_from_coords(g, pos);
    g.source = s;
    g.sink = t;
    g.outer_hint = {est}; /* (s,t) is the right outer boundary and never splits */

    /* grow by subdividing edges away from the source so the obstruction in
     * the source's successor list survives */
    std::mt19937_64 rng(seed);
    for (int k = 4; k < n; ++k) {
        std::vector<EdgeId> cand;
        for (EdgeId e = 0; e < (EdgeId)g.edges.size(); ++e)
            if (g.edges[e].alive && g.edges[e].tail != s) cand.push_back(e);
        subdivide(g, cand[rng() % cand.size()]);
    }
    return relabel_real(g);
}

PlaneStGraph relabel_real(const PlaneStGraph& g) {
    PlaneStGraph out = g;
    for (auto& k : out.vkind) k = VertexKind::Real;
    for (auto& e : out.edges) e.kind = EdgeKind::Real;
    return out;
}

} // namespace updraw
