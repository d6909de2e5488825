#include "updraw/ordering.hpp"

#include <algorithm>
#include <queue>

namespace updraw {

static StOrdering from_topo(const std::vector<VertexId>& topo, int n) {
    StOrdering s;
    s.rank.assign(n, 0);
    s.by_rank = topo;
    for (int i = 0; i < (int)topo.size(); ++i) s.rank[topo[i]] = i + 1;
    return s;
}

StOrdering st_order(const PlaneStGraph& g) {
    return from_topo(topological_order(g), g.n());
}

std::vector<RowConstraints> successor_constraints(const PlaneStGraph& g,
                                                  const Reachability& reach) {
    std::vector<RowConstraints> rows;
    for (VertexId u = 0; u < g.n(); ++u) {
        RowConstraints row;
        row.u = u;
        row.succ = successors_cw(g, u);
        for (int k = 0; k + 1 < (int)row.succ.size(); ++k) {
            VertexId a = row.succ[k], b = row.succ[k + 1];
            if (reach.reaches(a, b))
                row.pairs.push_back(Constraint::Inc);
            else if (reach.reaches(b, a))
                row.pairs.push_back(Constraint::Dec);
            else
                row.pairs.push_back(Constraint::Free);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

static std::optional<ForbiddenConfig> find_forbidden(const std::vector<RowConstraints>& rows) {
    for (const auto& row : rows) {
        int first_dec = -1;
        for (int k = 0; k < (int)row.pairs.size(); ++k) {
            if (row.pairs[k] == Constraint::Dec && first_dec < 0) first_dec = k;
            if (row.pairs[k] == Constraint::Inc && first_dec >= 0)
                return ForbiddenConfig{row.u, first_dec, k};
        }
    }
    return std::nullopt;
}

std::variant<StOrdering, ForbiddenConfig> bitonic_order(const PlaneStGraph& g) {
    Reachability reach(g);
    auto rows = successor_constraints(g, reach);
    if (auto fc = find_forbidden(rows)) return *fc;

    /* orient every row: increasing up to the peak, decreasing after; the
     * peak sits just before the first forced decrease (at the end when
     * there is none).  The oriented pairs plus the graph edges form a
     * digraph whose topological order is the wanted numbering. */
    int n = g.n();
    std::vector<std::vector<VertexId>> adj(n);
    std::vector<int> indeg(n, 0);
    auto arc = [&](VertexId a, VertexId b) {
        adj[a].push_back(b);
        ++indeg[b];
    };
    for (const auto& e : g.edges)
        if (e.alive) arc(e.tail, e.head);
    for (const auto& row : rows) {
        int q = (int)row.succ.size();
        int peak = q - 1; /* index of the peak vertex in the row */
        for (int k = 0; k < (int)row.pairs.size(); ++k) {
            if (row.pairs[k] == Constraint::Dec) {
                peak = k;
                break;
            }
        }
        for (int k = 0; k + 1 < q; ++k) {
            if (row.pairs[k] != Constraint::Free) continue; /* already forced by a path */
            if (k < peak)
                arc(row.succ[k], row.succ[k + 1]);
            else
                arc(row.succ[k + 1], row.succ[k]);
        }
    }

    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> q;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push(v);
    std::vector<VertexId> order;
    while (!q.empty()) {
        VertexId v = q.top();
        q.pop();
        order.push_back(v);
        for (VertexId w : adj[v])
            if (--indeg[w] == 0) q.push(w);
    }
    if ((int)order.size() != n)
        throw internal_error("bitonic_order: oriented constraint digraph is cyclic although no "
                             "forbidden configuration exists");
    StOrdering sigma = from_topo(order, n);
    if (!is_bitonic(g, sigma))
        throw internal_error("bitonic_order: produced ordering is not bitonic");
    return sigma;
}

bool is_bitonic(const PlaneStGraph& g, const StOrdering& sigma) {
    for (VertexId u = 0; u < g.n(); ++u) {
        auto succ = successors_cw(g, u);
        int q = (int)succ.size();
        if (q <= 1) continue;
        int k = 0;
        while (k + 1 < q && sigma.of(succ[k]) < sigma.of(succ[k + 1])) ++k;
        while (k + 1 < q && sigma.of(succ[k]) > sigma.of(succ[k + 1])) ++k;
        if (k + 1 < q) return false;
    }
    return true;
}

BitonicSubdivision bitonic_subdivide(const PlaneStGraph& g) {
    BitonicSubdivision out;
    out.graph = g;
    PlaneStGraph& h = out.graph;
    int orig_n = g.n();

    /* Split the head edge of every forced increase that follows a forced
     * decrease within the same row.  The new vertex has a single
     * predecessor, so the pair in front of it goes free and nothing else
     * changes; one sweep per row settles it, the loop is a guard. */
    for (int pass = 0;; ++pass) {
        if (pass > 2) throw internal_error("bitonic_subdivide: did not converge");
        Reachability reach(h);
        auto rows = successor_constraints(h, reach);
        bool changed = false;
        for (const auto& row : rows) {
            int first_dec = -1;
            std::vector<int> to_split; /* indices into the row's edge list */
            for (int k = 0; k < (int)row.pairs.size(); ++k) {
                if (row.pairs[k] == Constraint::Dec && first_dec < 0) first_dec = k;
                if (row.pairs[k] == Constraint::Inc && first_dec >= 0) to_split.push_back(k + 1);
            }
            if (to_split.empty()) continue;
            changed = true;
            auto out_cw = out_edges_cw(h, row.u);
            for (int pos : to_split) {
                EdgeId e = out_cw[pos];
                VertexId d = subdivide(h, e);
                EdgeId upper = (EdgeId)h.edges.size() - 1;
                h.edges[e].kind = EdgeKind::LowerStub;
                h.edges[upper].kind = EdgeKind::UpperStub;
                out.splits.push_back({e, upper, d});
            }
        }
        if (!changed) break;
    }
    if ((int)out.splits.size() > orig_n - 3)
        throw internal_error("bitonic_subdivide: exceeded the n-3 split budget (" +
                             std::to_string(out.splits.size()) + " splits, n=" +
                             std::to_string(orig_n) + ")");
    return out;
}

} // namespace updraw
