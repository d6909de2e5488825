#include "updraw/augment.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace updraw {

namespace {

int index_of_edge(const std::vector<EdgeId>& rot, EdgeId e) {
    for (int i = 0; i < (int)rot.size(); ++i)
        if (rot[i] == e) return i;
    throw internal_error("edge not found in rotation");
}

/* list-insert x immediately before anchor in the circular order */
void insert_before(std::vector<EdgeId>& rot, EdgeId anchor, EdgeId x) {
    rot.insert(rot.begin() + index_of_edge(rot, anchor), x);
}

/* list-insert x immediately after anchor in the circular order */
void insert_after(std::vector<EdgeId>& rot, EdgeId anchor, EdgeId x) {
    rot.insert(rot.begin() + index_of_edge(rot, anchor) + 1, x);
}

struct OuterPath {
    std::vector<VertexId> verts;
    std::vector<EdgeId> edges; /* edges[k] joins verts[k], verts[k+1] */

    int pos(VertexId v) const {
        for (int i = 0; i < (int)verts.size(); ++i)
            if (verts[i] == v) return i;
        throw internal_error("vertex not on outer path");
    }
};

} // namespace

CanonicalAugmentation canonical_augment(const PlaneStGraph& gb, const StOrdering& sigma) {
    if (gb.n() < 3)
        throw input_error("augmentation needs at least 3 vertices");

    CanonicalAugmentation aug;
    aug.g = gb;
    aug.orig_vertex_count = gb.n();
    aug.orig_edge_count = (int)gb.edges.size(); /* id bound, dead slots included */
    PlaneStGraph& g = aug.g;

    const int nb = gb.n();
    VertexId v1 = sigma.by_rank[0];
    if (v1 != gb.source)
        throw internal_error("ordering does not start at the source");

    aug.vl = g.add_vertex("_vL", VertexKind::Pole);
    aug.vr = g.add_vertex("_vR", VertexKind::Pole);

    /* base triangle: rotations are fixed so that the outer walk runs
     * vr -> vl -> v1 -> vr */
    EdgeId ea = g.add_edge(aug.vl, aug.vr, EdgeKind::Dummy);
    aug.base_edge = ea;
    EdgeId eb = -1, ec = -1;
    {
        /* raw add_edge appended to rotations; rebuild the pole rotations and
         * splice the two incoming edges into v1 by hand */
        ec = g.edges.size();
        g.edges.push_back({aug.vr, v1, EdgeKind::Dummy, true});
        eb = g.edges.size();
        g.edges.push_back({aug.vl, v1, EdgeKind::Dummy, true});
        g.rotation[aug.vl] = {ea, eb};
        g.rotation[aug.vr] = {ec, ea};
        g.rotation[v1].push_back(ec);
        g.rotation[v1].push_back(eb);
    }

    aug.chi.clear();
    aug.chi.push_back(aug.vl);
    aug.chi.push_back(aug.vr);
    for (VertexId v : sigma.by_rank) aug.chi.push_back(v);

    Reachability reach(gb);

    OuterPath path;
    path.verts = {aug.vl, v1, aug.vr};
    path.edges = {eb, ec};

    /* real predecessors left to right = reverse of the incoming block in the
     * clockwise rotation; the block is circular, so start it at an incoming
     * edge whose predecessor goes out (list start when every edge comes in) */
    auto preds_ltr = [&](VertexId v) {
        const auto& rot = g.rotation[v];
        int k = (int)rot.size();
        auto is_in = [&](int i) { return g.edges[rot[i]].head == v; };
        int start = 0;
        for (int i = 0; i < k; ++i)
            if (is_in(i) && !is_in((i + k - 1) % k)) {
                start = i;
                break;
            }
        std::vector<std::pair<VertexId, EdgeId>> out;
        for (int i = 0; i < k; ++i) {
            int j = (start + i) % k;
            if (!is_in(j)) break;
            EdgeId e = rot[j];
            if (e < aug.orig_edge_count) out.push_back({g.edges[e].tail, e});
        }
        std::reverse(out.begin(), out.end());
        return out;
    };

    for (int k = 1; k < nb; ++k) {
        VertexId vi = sigma.by_rank[k];
        int rank_vi = k + 1;
        auto preds = preds_ltr(vi);
        if (preds.empty())
            throw internal_error("non-initial vertex without predecessors");

        /* predecessors must sit on the outer path in left-to-right order */
        std::vector<int> pp;
        for (auto& [u, e] : preds) pp.push_back(path.pos(u));
        if (!std::is_sorted(pp.begin(), pp.end()) ||
            std::adjacent_find(pp.begin(), pp.end()) != pp.end()) {
            std::string msg = "predecessors of " + g.names[vi] + " out of order on the outer path:";
            for (auto& [u, e] : preds)
                msg += " " + g.names[u] + "@" + std::to_string(path.pos(u));
            throw internal_error(msg);
        }

        /* anything strictly between two predecessors gets enclosed; it must
         * have no edge to a later vertex */
        for (int p = pp.front() + 1; p < pp.back(); ++p) {
            VertexId x = path.verts[p];
            bool is_pred = false;
            for (auto& [u, e] : preds) is_pred |= (u == x);
            if (is_pred) continue;
            for (EdgeId e : g.rotation[x]) {
                if (e >= aug.orig_edge_count) continue;
                if (g.edges[e].tail == x && sigma.of(g.edges[e].head) > rank_vi)
                    throw internal_error("enclosing a vertex with later successors");
            }
        }

        if (preds.size() == 1) {
            /* single predecessor u: attach a dummy edge from the outer-path
             * neighbor of u on the side away from u's later out-edges */
            VertexId u = preds[0].first;
            EdgeId eu = preds[0].second;
            auto outs = out_edges_cw(g, u);
            int p = index_of_edge(outs, eu);
            bool later_left = false, later_right = false;
            for (int q = 0; q < (int)outs.size(); ++q) {
                VertexId h = g.edges[outs[q]].head;
                if (h == aug.vl || h == aug.vr) continue;
                if (sigma.of(h) > rank_vi) (q < p ? later_left : later_right) |= (q != p);
            }
            if (later_left && later_right)
                throw internal_error("later successors on both sides of a single-predecessor edge");

            int up = path.pos(u);
            bool attach_left; /* dummy tail = outer-path predecessor of u */
            if (later_right) attach_left = true;
            else if (later_left) attach_left = false;
            else attach_left = true; /* no later successors: lean toward vl */
            if (up == 0) attach_left = false;
            if (up == (int)path.verts.size() - 1) attach_left = true;

            if (attach_left) {
                VertexId w = path.verts[up - 1];
                EdgeId d = (EdgeId)g.edges.size();
                g.edges.push_back({w, vi, EdgeKind::Dummy, true});
                /* at w the new edge becomes the boundary edge toward vi */
                insert_before(g.rotation[w], path.edges[up - 1], d);
                /* leftmost incoming edge of vi: after the current leftmost */
                insert_after(g.rotation[vi], eu, d);
                preds.insert(preds.begin(), {w, d});
            } else {
                VertexId w = path.verts[up + 1];
                EdgeId d = (EdgeId)g.edges.size();
                g.edges.push_back({w, vi, EdgeKind::Dummy, true});
                insert_after(g.rotation[w], path.edges[up], d);
                /* rightmost incoming edge of vi: before the current rightmost */
                insert_before(g.rotation[vi], eu, d);
                preds.push_back({w, d});
            }
        }

        /* a subdivision upper stub must not stay at an extreme incoming
         * position, or its other segment could not run horizontally */
        if (g.edges[preds.front().second].kind == EdgeKind::UpperStub) {
            int up = path.pos(preds.front().first);
            if (up == 0)
                throw internal_error("upper stub incident to the left pole");
            VertexId w = path.verts[up - 1];
            EdgeId d = (EdgeId)g.edges.size();
            g.edges.push_back({w, vi, EdgeKind::Dummy, true});
            insert_before(g.rotation[w], path.edges[up - 1], d);
            insert_after(g.rotation[vi], preds.front().second, d);
            preds.insert(preds.begin(), {w, d});
        }
        if (g.edges[preds.back().second].kind == EdgeKind::UpperStub) {
            int up = path.pos(preds.back().first);
            if (up == (int)path.verts.size() - 1)
                throw internal_error("upper stub incident to the right pole");
            VertexId w = path.verts[up + 1];
            EdgeId d = (EdgeId)g.edges.size();
            g.edges.push_back({w, vi, EdgeKind::Dummy, true});
            insert_after(g.rotation[w], path.edges[up], d);
            insert_before(g.rotation[vi], preds.back().second, d);
            preds.push_back({w, d});
        }

        /* outer path: the span between the end predecessors collapses to
         * left_end, vi, right_end */
        int a = path.pos(preds.front().first);
        int b = path.pos(preds.back().first);
        std::vector<VertexId> nv(path.verts.begin(), path.verts.begin() + a + 1);
        std::vector<EdgeId> ne(path.edges.begin(), path.edges.begin() + a);
        nv.push_back(vi);
        ne.push_back(preds.front().second);
        ne.push_back(preds.back().second);
        nv.insert(nv.end(), path.verts.begin() + b, path.verts.end());
        ne.insert(ne.end(), path.edges.begin() + b, path.edges.end());
        path.verts = std::move(nv);
        path.edges = std::move(ne);

        if (k == 1) {
            if (path.verts.size() != 4)
                throw internal_error("unexpected outer path after the second vertex");
            for (int i = 0; i < 4; ++i) aug.base_path[i] = path.verts[i];
            for (int i = 0; i < 3; ++i) aug.base_path_edges[i] = path.edges[i];
        }
    }

    /* close the outer region: every remaining outer-path vertex gains an
     * edge to the last vertex, so the outer face becomes the pole triangle */
    VertexId vlast = sigma.by_rank.back();
    int lp = path.pos(vlast);
    if (lp < 1 || lp + 1 >= (int)path.verts.size())
        throw internal_error("last vertex misplaced on the outer path");
    EdgeId cur_leftmost = path.edges[lp - 1];
    for (int p = lp - 1; p >= 0; --p) {
        VertexId w = path.verts[p];
        EdgeId have = -1;
        for (EdgeId e : g.rotation[w])
            if (g.other(e, w) == vlast) have = e;
        if (have >= 0) {
            cur_leftmost = have;
            continue;
        }
        EdgeId dd = (EdgeId)g.edges.size();
        g.edges.push_back({w, vlast, EdgeKind::Dummy, true});
        insert_before(g.rotation[w], path.edges[p], dd);
        insert_after(g.rotation[vlast], cur_leftmost, dd);
        cur_leftmost = dd;
    }
    EdgeId cur_rightmost = path.edges[lp];
    for (int p = lp + 1; p < (int)path.verts.size(); ++p) {
        VertexId w = path.verts[p];
        EdgeId have = -1;
        for (EdgeId e : g.rotation[w])
            if (g.other(e, w) == vlast) have = e;
        if (have >= 0) {
            cur_rightmost = have;
            continue;
        }
        EdgeId dd = (EdgeId)g.edges.size();
        g.edges.push_back({w, vlast, EdgeKind::Dummy, true});
        insert_after(g.rotation[w], path.edges[p - 1], dd);
        insert_before(g.rotation[vlast], cur_rightmost, dd);
        cur_rightmost = dd;
    }

    g.source = aug.vl;
    g.sink = vlast;
    g.outer_hint = {aug.base_edge};

    /* the input rotation must survive untouched on the input edges */
    for (VertexId v = 0; v < gb.n(); ++v) {
        std::vector<EdgeId> kept;
        for (EdgeId e : g.rotation[v])
            if (e < aug.orig_edge_count) kept.push_back(e);
        if (kept.size() != gb.rotation[v].size())
            throw internal_error("input rotation entries lost");
        /* compare as circular sequences */
        int sz = (int)kept.size();
        bool match = (sz == 0);
        for (int s = 0; s < sz && !match; ++s) {
            bool ok = true;
            for (int i = 0; i < sz; ++i)
                ok &= (kept[(s + i) % sz] == gb.rotation[v][i]);
            match = ok;
        }
        if (!match)
            throw internal_error("augmentation disturbed the input rotation");
    }

    return aug;
}

void triangulate(CanonicalAugmentation& aug) {
    PlaneStGraph& g = aug.g;
    for (;;) {
        FaceList fl = faces(g);
        bool changed = false;
        for (int fi = 0; fi < (int)fl.faces.size() && !changed; ++fi) {
            if (fi == fl.outer) continue;
            const auto& ds = fl.faces[fi].darts;
            int k = (int)ds.size();
            if (k <= 3) continue;
            /* the face sink is the unique corner whose arriving dart runs
             * with its edge and whose leaving dart runs against it */
            int p = -1;
            for (int j = 0; j < k; ++j) {
                const Dart& din = ds[j];
                const Dart& dout = ds[(j + 1) % k];
                if (din.forward && !dout.forward) {
                    if (p >= 0) throw internal_error("face with two sinks");
                    p = j;
                }
            }
            if (p < 0) throw internal_error("face without a sink");
            VertexId tf = g.dart_head(ds[p]);
            /* cut off the triangle at the corner two steps before the sink */
            int j = ((p - 2) % k + k) % k;
            VertexId x = g.dart_head(ds[j]);
            if (x == tf || g.dart_head(ds[(j + k - 1) % k]) == tf)
                throw internal_error("degenerate face walk");
            for (EdgeId e : g.rotation[x])
                if (g.other(e, x) == tf)
                    throw internal_error("triangulation would create a parallel edge");
            add_edge_in_face(g, ds[j], ds[p], EdgeKind::Dummy);
            changed = true;
        }
        if (!changed) break;
    }
}

int delta_star(const CanonicalAugmentation& aug) {
    int best = 0;
    for (VertexId v = 0; v < aug.g.n(); ++v) {
        int c = 0;
        for (EdgeId e : aug.g.rotation[v])
            if (aug.g.edges[e].kind == EdgeKind::Dummy) ++c;
        best = std::max(best, c);
    }
    return best;
}

std::vector<EdgeId> removed_base_edges(const CanonicalAugmentation& aug) {
    std::set<VertexId> base(aug.base_path.begin(), aug.base_path.end());
    std::set<EdgeId> keep(aug.base_path_edges.begin(), aug.base_path_edges.end());
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < (EdgeId)aug.g.edges.size(); ++e) {
        const Edge& ed = aug.g.edges[e];
        if (!ed.alive || keep.count(e)) continue;
        if (base.count(ed.tail) && base.count(ed.head)) {
            if (ed.kind != EdgeKind::Dummy)
                throw internal_error("input edge scheduled for removal");
            out.push_back(e);
        }
    }
    return out;
}

namespace {

/* simple undirected 2-connectivity over a vertex subset */
bool two_connected(const PlaneStGraph& g, const std::vector<VertexId>& sub) {
    if (sub.size() < 3) return false;
    std::set<VertexId> in(sub.begin(), sub.end());
    std::map<VertexId, std::vector<VertexId>> adj;
    for (VertexId v : sub) adj[v] = {};
    for (VertexId v : sub)
        for (EdgeId e : g.rotation[v]) {
            VertexId w = g.other(e, v);
            if (g.edges[e].tail == v && in.count(w)) {
                adj[v].push_back(w);
                adj[w].push_back(v);
            }
        }
    std::map<VertexId, int> num, low;
    int counter = 0;
    bool ok = true;
    struct Frame { VertexId v, parent; size_t i; };
    VertexId root = sub[0];
    std::vector<Frame> st{{root, -1, 0}};
    num[root] = low[root] = counter++;
    int root_children = 0;
    while (!st.empty() && ok) {
        Frame& f = st.back();
        if (f.i < adj[f.v].size()) {
            VertexId w = adj[f.v][f.i++];
            if (!num.count(w)) {
                num[w] = low[w] = counter++;
                if (f.v == root) ++root_children;
                st.push_back({w, f.v, 0});
            } else if (w != f.parent) {
                low[f.v] = std::min(low[f.v], num[w]);
            }
        } else {
            VertexId v = f.v, parent = f.parent;
            st.pop_back();
            if (parent >= 0) {
                low[parent] = std::min(low[parent], low[v]);
                if (parent != root && low[v] >= num[parent]) ok = false;
            }
        }
    }
    if ((int)num.size() != (int)sub.size()) return false;
    if (root_children > 1) return false;
    return ok;
}

} // namespace

Diagnostics verify_upward_canonical(const CanonicalAugmentation& aug) {
    Diagnostics d;
    const PlaneStGraph& g = aug.g;
    const auto& chi = aug.chi;
    const int nn = (int)chi.size();

    /* chi must be a topological order */
    std::vector<int> rank(g.n(), -1);
    for (int i = 0; i < nn; ++i) rank[chi[i]] = i;
    bool topo = ((int)chi.size() == g.n());
    for (const Edge& e : g.edges)
        if (e.alive) topo &= (rank[e.tail] >= 0 && rank[e.head] >= 0 && rank[e.tail] < rank[e.head]);
    d.add("order-topological", topo, "every edge runs forward in the order");

    /* no parallel edges */
    std::set<std::pair<VertexId, VertexId>> seen;
    bool simple = true;
    for (const Edge& e : g.edges) {
        if (!e.alive) continue;
        auto key = std::minmax(e.tail, e.head);
        simple &= seen.insert({key.first, key.second}).second;
    }
    d.add("no-parallel-edges", simple, "");

    bool prefixes_ok = true, contiguous_ok = true;
    std::string why_prefix, why_contig;
    for (int i = 3; i <= nn && prefixes_ok; ++i) {
        std::vector<VertexId> sub(chi.begin(), chi.begin() + i);
        std::set<VertexId> in(sub.begin(), sub.end());

        /* restrict to the prefix and walk its faces */
        PlaneStGraph h = g;
        for (EdgeId e = 0; e < (EdgeId)h.edges.size(); ++e)
            if (h.edges[e].alive && !(in.count(h.edges[e].tail) && in.count(h.edges[e].head)))
                h.remove_edge(e);
        h.outer_hint = {aug.base_edge};

        if (!two_connected(h, sub)) {
            prefixes_ok = false;
            why_prefix = "prefix " + std::to_string(i) + " is not 2-connected";
            break;
        }

        FaceList fl;
        try {
            fl = faces(h);
        } catch (const std::exception& ex) {
            prefixes_ok = false;
            why_prefix = "prefix " + std::to_string(i) + ": " + ex.what();
            break;
        }
        if (fl.outer < 0) {
            prefixes_ok = false;
            why_prefix = "prefix " + std::to_string(i) + " has no outer face";
            break;
        }
        for (int fj = 0; fj < (int)fl.faces.size(); ++fj) {
            if (fj == fl.outer) continue;
            if (fl.faces[fj].darts.size() != 3) {
                prefixes_ok = false;
                why_prefix = "prefix " + std::to_string(i) + " has a non-triangular inner face";
            }
        }
        if (!prefixes_ok) break;

        /* outer walk: simple cycle through the pole edge */
        const auto& ods = fl.faces[fl.outer].darts;
        std::set<VertexId> walk_verts;
        bool simple_cycle = true;
        bool has_base = false;
        for (const Dart& dd : ods) {
            simple_cycle &= walk_verts.insert(h.dart_head(dd)).second;
            has_base |= (dd.edge == aug.base_edge);
        }
        if (!simple_cycle || !has_base) {
            prefixes_ok = false;
            why_prefix = "prefix " + std::to_string(i) + " outer boundary is not a cycle through the poles";
            break;
        }

        /* next vertex: neighbors in the prefix form a contiguous subpath of
         * the outer boundary minus the pole edge */
        if (i < nn && contiguous_ok) {
            VertexId vn = chi[i];
            std::set<VertexId> nb;
            for (EdgeId e : g.rotation[vn]) {
                VertexId w = g.other(e, vn);
                if (g.edges[e].head == vn && in.count(w)) nb.insert(w);
            }
            if (nb.size() < 2) {
                contiguous_ok = false;
                why_contig = "vertex at position " + std::to_string(i) + " has fewer than 2 placed neighbors";
            } else {
                /* path order: start after the pole edge */
                std::vector<VertexId> cyc;
                int start = 0;
                for (int j = 0; j < (int)ods.size(); ++j)
                    if (ods[j].edge == aug.base_edge) start = j;
                for (int j = 0; j < (int)ods.size(); ++j)
                    cyc.push_back(h.dart_head(ods[(start + j) % ods.size()]));
                int first = -1, last = -1;
                for (int j = 0; j < (int)cyc.size(); ++j)
                    if (nb.count(cyc[j])) {
                        if (first < 0) first = j;
                        last = j;
                    }
                if (last - first + 1 != (int)nb.size()) {
                    contiguous_ok = false;
                    why_contig = "neighbors of the vertex at position " + std::to_string(i) +
                                 " are not contiguous on the boundary";
                }
            }
        }
    }
    d.add("prefixes-triangulated-2-connected", prefixes_ok, why_prefix);
    d.add("neighborhoods-contiguous", contiguous_ok, why_contig);
    return d;
}

} // namespace updraw
