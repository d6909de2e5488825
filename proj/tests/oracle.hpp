#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "updraw/graph.hpp"
#include "updraw/ordering.hpp"

namespace updraw {

/* exhaustive reference: does any topological order make every clockwise
 * successor list bitonic?  usable up to n ~ 8 */
inline bool oracle_has_bitonic(const PlaneStGraph& g) {
    int n = g.n();
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        StOrdering s;
        s.rank.assign(n, 0);
        s.by_rank = perm;
        for (int i = 0; i < n; ++i) s.rank[perm[i]] = i + 1;
        bool topo = true;
        for (const Edge& e : g.edges)
            if (e.alive && s.rank[e.tail] >= s.rank[e.head]) {
                topo = false;
                break;
            }
        if (topo && is_bitonic(g, s)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/* a forbidden configuration is sound when the named row really has a forced
 * decrease at pair i followed by a forced increase at pair j */
inline bool witness_sound(const PlaneStGraph& g, const ForbiddenConfig& fc) {
    if (fc.i < 0 || fc.j <= fc.i) return false;
    Reachability reach(g);
    auto succ = successors_cw(g, fc.u);
    if (fc.j + 1 >= (int)succ.size()) return false;
    bool dec = reach.reaches(succ[fc.i + 1], succ[fc.i]);
    bool inc = reach.reaches(succ[fc.j], succ[fc.j + 1]);
    return dec && inc;
}

} // namespace updraw
