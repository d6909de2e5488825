#pragma once

#include <array>
#include <vector>

#include "updraw/graph.hpp"
#include "updraw/ordering.hpp"

namespace updraw {

/* Input graph extended with two poles and enough dummy edges that every
 * ordered vertex has at least two predecessors; after triangulate() the
 * order chi is an upward canonical ordering.  Input vertex and edge ids
 * are preserved (everything added sits behind orig_* counts). */
struct CanonicalAugmentation {
    PlaneStGraph g;
    VertexId vl = -1;
    VertexId vr = -1;
    EdgeId base_edge = -1;              /* (vl, vr) */
    std::vector<VertexId> chi;          /* vl, vr, then input vertices by rank */
    std::array<VertexId, 4> base_path{}; /* outer path after the second ranked vertex */
    std::array<EdgeId, 3> base_path_edges{};
    int orig_vertex_count = 0;
    int orig_edge_count = 0;

    bool is_dummy_edge(EdgeId e) const { return g.edges[e].kind == EdgeKind::Dummy; }
};

/* build the augmented graph for a bitonic st-ordering; upper stubs of
 * subdivided edges are kept away from the extreme incoming positions of
 * their heads */
CanonicalAugmentation canonical_augment(const PlaneStGraph& gb, const StOrdering& sigma);

/* add a chord fan toward the sink of every non-triangular inner face */
void triangulate(CanonicalAugmentation& aug);

/* independent certificate that chi is an upward canonical ordering of the
 * triangulated graph: every prefix is 2-connected and internally
 * triangulated with (vl,vr) on its outer cycle, the next vertex's
 * neighborhood is a contiguous subpath of the outer path, no parallel
 * edges, chi topological */
Diagnostics verify_upward_canonical(const CanonicalAugmentation& aug);

/* largest number of dummy edges at one vertex */
int delta_star(const CanonicalAugmentation& aug);

/* dummy edges withheld from the drawing: everything between the first four
 * ordered vertices that is not on the base path */
std::vector<EdgeId> removed_base_edges(const CanonicalAugmentation& aug);

} // namespace updraw
