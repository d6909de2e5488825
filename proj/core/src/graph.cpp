#include "updraw/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace updraw {

EdgeId PlaneStGraph::insert_edge_after(VertexId u, EdgeId au, VertexId v, EdgeId av, EdgeKind k) {
    EdgeId e = (EdgeId)edges.size();
    edges.push_back({u, v, k, true});
    auto ins = [&](VertexId x, EdgeId after) {
        auto& rot = rotation[x];
        auto it = std::find(rot.begin(), rot.end(), after);
        if (it == rot.end()) throw internal_error("insert_edge_after: anchor edge not in rotation");
        rot.insert(it + 1, e);
    };
    ins(u, au);
    ins(v, av);
    return e;
}

void PlaneStGraph::remove_edge(EdgeId e) {
    Edge& ed = edges[e];
    if (!ed.alive) return;
    auto drop = [&](VertexId x) {
        auto& rot = rotation[x];
        rot.erase(std::remove(rot.begin(), rot.end(), e), rot.end());
    };
    drop(ed.tail);
    drop(ed.head);
    ed.alive = false;
}

Dart PlaneStGraph::face_next(Dart d) const {
    VertexId v = dart_head(d);
    const auto& rot = rotation[v];
    auto it = std::find(rot.begin(), rot.end(), d.edge);
    if (it == rot.end()) throw internal_error("face_next: edge not in rotation of its head");
    size_t i = (size_t)(it - rot.begin());
    EdgeId e2 = rot[(i + 1) % rot.size()];
    return dart_from(e2, v);
}

std::vector<EdgeId> PlaneStGraph::in_edges(VertexId v) const {
    std::vector<EdgeId> r;
    for (EdgeId e : rotation[v])
        if (edges[e].head == v) r.push_back(e);
    return r;
}

std::vector<EdgeId> PlaneStGraph::out_edges(VertexId v) const {
    std::vector<EdgeId> r;
    for (EdgeId e : rotation[v])
        if (edges[e].tail == v) r.push_back(e);
    return r;
}

int PlaneStGraph::max_degree() const {
    int d = 0;
    for (VertexId v = 0; v < n(); ++v) d = std::max(d, degree(v));
    return d;
}

std::optional<VertexId> PlaneStGraph::find_vertex(const std::string& name) const {
    for (VertexId v = 0; v < n(); ++v)
        if (names[v] == name) return v;
    return std::nullopt;
}

FaceList faces(const PlaneStGraph& g) {
    FaceList fl;
    /* 0 = unvisited; dart (e,fwd) -> flag index 2e+fwd */
    std::vector<char> seen(g.edges.size() * 2, 0);
    for (EdgeId e = 0; e < (EdgeId)g.edges.size(); ++e) {
        if (!g.edges[e].alive) continue;
        for (int fwd = 0; fwd < 2; ++fwd) {
            if (seen[2 * e + fwd]) continue;
            Face f;
            Dart d{e, (bool)fwd};
            Dart cur = d;
            do {
                seen[2 * cur.edge + (cur.forward ? 1 : 0)] = 1;
                f.darts.push_back(cur);
                cur = g.face_next(cur);
                if (f.darts.size() > g.edges.size() * 2 + 2)
                    throw internal_error("faces: walk does not close");
            } while (!(cur == d));
            fl.faces.push_back(std::move(f));
        }
    }

    auto walk_has_vertex = [&](const Face& f, VertexId v) {
        for (Dart d : f.darts)
            if (g.dart_tail(d) == v) return true;
        return false;
    };

    if (g.outer_hint.size() == 1) {
        /* one-edge hint: the named edge is the bottom of the outer walk,
         * which traverses it against its direction (the walk runs clockwise) */
        Dart want{g.outer_hint[0], false};
        for (int i = 0; i < (int)fl.faces.size(); ++i)
            for (Dart d : fl.faces[i].darts)
                if (d == want) fl.outer = i;
    } else if (!g.outer_hint.empty()) {
        std::multiset<EdgeId> want(g.outer_hint.begin(), g.outer_hint.end());
        for (int i = 0; i < (int)fl.faces.size(); ++i) {
            std::multiset<EdgeId> have;
            for (Dart d : fl.faces[i].darts) have.insert(d.edge);
            if (have == want) {
                fl.outer = i;
                break;
            }
        }
    } else if (g.source >= 0 && g.sink >= 0) {
        int found = -1, count = 0;
        for (int i = 0; i < (int)fl.faces.size(); ++i) {
            if (walk_has_vertex(fl.faces[i], g.source) && walk_has_vertex(fl.faces[i], g.sink)) {
                found = i;
                ++count;
            }
        }
        if (count == 1) fl.outer = found;
    }
    return fl;
}

std::vector<EdgeId> out_edges_cw(const PlaneStGraph& g, VertexId u) {
    const auto& rot = g.rotation[u];
    int k = (int)rot.size();
    if (k == 0) return {};
    auto is_out = [&](int i) { return g.edges[rot[i]].tail == u; };
    /* find start of the outgoing block: an out edge whose cw predecessor is
     * incoming (or all edges outgoing) */
    int start = -1;
    bool all_out = true;
    for (int i = 0; i < k; ++i) {
        if (!is_out(i)) {
            all_out = false;
        }
    }
    if (all_out) {
        start = 0;
    } else {
        for (int i = 0; i < k; ++i) {
            if (is_out(i) && !is_out((i + k - 1) % k)) {
                start = i;
                break;
            }
        }
    }
    std::vector<EdgeId> res;
    if (start < 0) return res; /* no outgoing edges */
    for (int i = 0; i < k; ++i) {
        int j = (start + i) % k;
        if (!is_out(j)) break;
        res.push_back(rot[j]);
    }
    return res;
}

std::vector<VertexId> successors_cw(const PlaneStGraph& g, VertexId u) {
    std::vector<VertexId> res;
    for (EdgeId e : out_edges_cw(g, u)) res.push_back(g.edges[e].head);
    return res;
}

std::vector<VertexId> predecessors_cw(const PlaneStGraph& g, VertexId v) {
    const auto& rot = g.rotation[v];
    int k = (int)rot.size();
    auto is_in = [&](int i) { return g.edges[rot[i]].head == v; };
    int start = -1;
    bool all_in = true;
    for (int i = 0; i < k; ++i)
        if (!is_in(i)) all_in = false;
    if (all_in) {
        start = 0;
    } else {
        for (int i = 0; i < k; ++i) {
            if (is_in(i) && !is_in((i + k - 1) % k)) {
                start = i;
                break;
            }
        }
    }
    std::vector<VertexId> res;
    if (start < 0) return res;
    for (int i = 0; i < k; ++i) {
        int j = (start + i) % k;
        if (!is_in(j)) break;
        res.push_back(g.edges[rot[j]].tail);
    }
    return res;
}

static bool blocks_contiguous(const PlaneStGraph& g, VertexId v) {
    const auto& rot = g.rotation[v];
    int k = (int)rot.size();
    if (k <= 2) return true;
    /* count direction changes around the cycle; two contiguous blocks give
     * exactly two changes (or zero if one block is empty) */
    int changes = 0;
    for (int i = 0; i < k; ++i) {
        bool a = g.edges[rot[i]].tail == v;
        bool b = g.edges[rot[(i + 1) % k]].tail == v;
        if (a != b) ++changes;
    }
    return changes <= 2;
}

Diagnostics validate(const PlaneStGraph& g) {
    Diagnostics d;
    int n = g.n();
    if (n == 0) {
        d.add("nonempty", false, "graph has no vertices");
        return d;
    }

    /* rotation consistency: every live edge appears exactly once at each
     * endpoint and nowhere else */
    {
        bool ok = true;
        std::string msg;
        std::vector<int> count(g.edges.size(), 0);
        for (VertexId v = 0; v < n && ok; ++v) {
            for (EdgeId e : g.rotation[v]) {
                if (e < 0 || e >= (EdgeId)g.edges.size() || !g.edges[e].alive) {
                    ok = false;
                    msg = "rotation of " + g.names[v] + " references a dead or unknown edge";
                    break;
                }
                if (g.edges[e].tail != v && g.edges[e].head != v) {
                    ok = false;
                    msg = "rotation of " + g.names[v] + " lists a non-incident edge";
                    break;
                }
                ++count[e];
            }
        }
        for (EdgeId e = 0; e < (EdgeId)g.edges.size() && ok; ++e) {
            if (!g.edges[e].alive) continue;
            int want = g.edges[e].tail == g.edges[e].head ? 2 : 2;
            if (count[e] != want) {
                ok = false;
                msg = "edge " + std::to_string(e) + " appears " + std::to_string(count[e]) +
                      " times in rotations";
            }
        }
        d.add("rotation-consistent", ok, msg);
        if (!ok) return d;
    }

    /* self loops are never allowed in a DAG */
    for (const auto& e : g.edges) {
        if (e.alive && e.tail == e.head) {
            d.add("no-self-loops", false, "self loop present");
            return d;
        }
    }
    d.add("no-self-loops", true);

    /* acyclic */
    bool acyclic = true;
    try {
        topological_order(g);
    } catch (const input_error&) {
        acyclic = false;
    }
    d.add("acyclic", acyclic, acyclic ? "" : "directed cycle found");

    /* unique source/sink matching the declared ones */
    {
        std::vector<int> indeg(n, 0), outdeg(n, 0);
        for (const auto& e : g.edges) {
            if (!e.alive) continue;
            ++outdeg[e.tail];
            ++indeg[e.head];
        }
        std::vector<VertexId> sources, sinks;
        for (VertexId v = 0; v < n; ++v) {
            if (indeg[v] == 0) sources.push_back(v);
            if (outdeg[v] == 0) sinks.push_back(v);
        }
        bool ok = sources.size() == 1 && sinks.size() == 1 && g.source == sources[0] &&
                  g.sink == sinks[0] && g.source != g.sink;
        std::string msg;
        if (!ok) {
            msg = "expected exactly one source and one sink matching the declared ones; found " +
                  std::to_string(sources.size()) + " source(s), " + std::to_string(sinks.size()) +
                  " sink(s)";
        }
        d.add("single-source-sink", ok, msg);
        if (!ok) return d;
    }

    /* in/out blocks contiguous at every vertex */
    {
        bool ok = true;
        std::string msg;
        for (VertexId v = 0; v < n; ++v) {
            if (!blocks_contiguous(g, v)) {
                ok = false;
                msg = "incoming and outgoing edges are interleaved at " + g.names[v];
                break;
            }
        }
        d.add("contiguous-blocks", ok, msg);
    }

    /* Euler formula for a connected plane multigraph */
    {
        FaceList fl = faces(g);
        int m = g.m();
        /* connectivity (underlying undirected) */
        std::vector<char> vis(n, 0);
        std::vector<VertexId> stack{0};
        vis[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.rotation[v]) {
                VertexId w = g.other(e, v);
                if (!vis[w]) {
                    vis[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        bool conn = reached == n;
        d.add("connected", conn, conn ? "" : "embedding is not connected");
        bool euler = conn && (n - m + (int)fl.faces.size() == 2);
        d.add("euler", euler,
              euler ? ""
                    : "V-E+F=2 violated (F=" + std::to_string(fl.faces.size()) +
                          "); rotation system is not a planar embedding");
        if (!euler) return d;

        bool outer_ok = fl.outer >= 0;
        std::string msg;
        if (!outer_ok) {
            msg = g.outer_hint.empty()
                      ? "outer face is ambiguous: more than one face contains both source and "
                        "sink; provide an explicit outer walk"
                      : "declared outer walk does not match any face";
        }
        d.add("outer-face", outer_ok, msg);
        if (outer_ok) {
            bool s_on = false, t_on = false;
            for (Dart dd : fl.faces[fl.outer].darts) {
                if (g.dart_tail(dd) == g.source) s_on = true;
                if (g.dart_tail(dd) == g.sink) t_on = true;
            }
            d.add("st-on-outer", s_on && t_on,
                  s_on && t_on ? "" : "source or sink not on the outer face");
        }
    }
    return d;
}

Reachability::Reachability(const PlaneStGraph& g) {
    int n = g.n();
    int words = (n + 63) / 64;
    bits_.assign(n, std::vector<uint64_t>(words, 0));
    std::vector<VertexId> topo = topological_order(g);
    /* process in reverse topological order so successors are complete */
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        VertexId v = *it;
        bits_[v][v >> 6] |= uint64_t(1) << (v & 63);
        for (EdgeId e : g.rotation[v]) {
            if (g.edges[e].tail != v) continue;
            VertexId w = g.edges[e].head;
            for (int k = 0; k < words; ++k) bits_[v][k] |= bits_[w][k];
        }
    }
    /* a vertex does not count as reaching itself */
    for (VertexId v = 0; v < n; ++v) bits_[v][v >> 6] &= ~(uint64_t(1) << (v & 63));
}

VertexId subdivide(PlaneStGraph& g, EdgeId e) {
    Edge& ed = g.edges[e];
    if (!ed.alive) throw internal_error("subdivide: dead edge");
    VertexId u = ed.tail, v = ed.head;
    VertexId d = g.add_vertex(g.names[u] + ">" + g.names[v], VertexKind::Subdiv);
    EdgeId e2 = (EdgeId)g.edges.size();
    g.edges.push_back({d, v, ed.kind, true});
    /* e keeps its slot at u and becomes (u,d); e2 takes e's slot at v */
    g.edges[e].head = d;
    auto& rotv = g.rotation[v];
    *std::find(rotv.begin(), rotv.end(), e) = e2;
    g.rotation[d] = {e, e2};
    return d;
}

EdgeId add_edge_in_face(PlaneStGraph& g, Dart da, Dart db, EdgeKind k) {
    VertexId a = g.dart_head(da);
    VertexId b = g.dart_head(db);
    /* the new edge sits in the face corner right after the arriving dart,
     * i.e. directly after that edge in clockwise order */
    return g.insert_edge_after(a, da.edge, b, db.edge, k);
}

std::vector<VertexId> topological_order(const PlaneStGraph& g) {
    int n = g.n();
    std::vector<int> indeg(n, 0);
    for (const auto& e : g.edges)
        if (e.alive) ++indeg[e.head];
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> q;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push(v);
    std::vector<VertexId> order;
    order.reserve(n);
    while (!q.empty()) {
        VertexId v = q.top();
        q.pop();
        order.push_back(v);
        for (EdgeId e : g.rotation[v]) {
            if (!g.edges[e].alive || g.edges[e].tail != v) continue;
            if (--indeg[g.edges[e].head] == 0) q.push(g.edges[e].head);
        }
    }
    if ((int)order.size() != n) throw input_error("graph contains a directed cycle");
    return order;
}

} // namespace updraw
