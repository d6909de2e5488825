#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "updraw/graph.hpp"

namespace updraw {

/* st-numbering 1..n stored per vertex */
struct StOrdering {
    std::vector<int> rank;              /* by vertex id, 1-based */
    std::vector<VertexId> by_rank;      /* by_rank[r-1] = vertex with rank r */
    int of(VertexId v) const { return rank[v]; }
};

StOrdering st_order(const PlaneStGraph& g);

/* relation of a consecutive successor pair (v_k, v_{k+1}) in a row:
 * Inc when a path v_k ~> v_{k+1} forces rank(v_k) < rank(v_{k+1}),
 * Dec when a path the other way forces the opposite, Free otherwise */
enum class Constraint : uint8_t { Free, Inc, Dec };

struct RowConstraints {
    VertexId u = -1;
    std::vector<VertexId> succ;          /* clockwise successor list */
    std::vector<Constraint> pairs;       /* size succ.size()-1 */
};

std::vector<RowConstraints> successor_constraints(const PlaneStGraph& g,
                                                  const Reachability& reach);

/* a row with a forced decrease before a forced increase; no st-ordering
 * can make that row bitonic */
struct ForbiddenConfig {
    VertexId u = -1;
    int i = -1; /* 0-based pair index of the Dec */
    int j = -1; /* 0-based pair index of the Inc, i < j */
};

/* either a bitonic st-ordering or the witness that none exists */
std::variant<StOrdering, ForbiddenConfig> bitonic_order(const PlaneStGraph& g);

/* does sigma make every clockwise successor list rise strictly to a peak
 * and then fall strictly (monotone lists count) */
bool is_bitonic(const PlaneStGraph& g, const StOrdering& sigma);

struct SubdivisionRecord {
    EdgeId lower = -1;   /* reuses the original edge id */
    EdgeId upper = -1;
    VertexId dummy = -1;
};

struct BitonicSubdivision {
    PlaneStGraph graph;                       /* the subdivided graph */
    std::vector<SubdivisionRecord> splits;
};

/* split enough successor edges that a bitonic st-ordering exists; at most
 * n-3 splits (checked at runtime).  Lower/upper stubs keep drawing-real
 * edge kinds. */
BitonicSubdivision bitonic_subdivide(const PlaneStGraph& g);

} // namespace updraw
