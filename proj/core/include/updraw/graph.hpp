#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace updraw {

using VertexId = int;
using EdgeId = int;

/* thrown on malformed inputs (exit code 2 territory) */
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* thrown when an internal construction invariant breaks; always a bug,
 * never a property of the input */
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

enum class VertexKind : uint8_t {
    Real,  /* vertex of the input graph */
    Subdiv,/* subdivision vertex introduced on a split edge */
    Pole,  /* left/right pole added by the augmentation */
};

enum class EdgeKind : uint8_t {
    Real,      /* edge of the input graph */
    LowerStub, /* lower half of a subdivided edge */
    UpperStub, /* upper half of a subdivided edge */
    Dummy,     /* augmentation or triangulation edge */
};

/* for drawing purposes stubs are real: their segments must use the input
 * slope set because they become pieces of original edges */
inline bool edge_draws_real(EdgeKind k) { return k != EdgeKind::Dummy; }

struct Edge {
    VertexId tail = -1;
    VertexId head = -1;
    EdgeKind kind = EdgeKind::Real;
    bool alive = true;
};

/* a side of an edge: forward darts run tail->head */
struct Dart {
    EdgeId edge = -1;
    bool forward = true;
    bool operator==(const Dart&) const = default;
};

/* Plane st-graph: acyclic digraph with a single source and a single sink,
 * embedding given as the clockwise cyclic order of incident edges around
 * each vertex.  Vertices and edges keep stable ids; removal marks edges
 * dead and drops them from rotations. */
struct PlaneStGraph {
    std::vector<std::string> names;
    std::vector<VertexKind> vkind;
    std::vector<Edge> edges;
    std::vector<std::vector<EdgeId>> rotation; /* clockwise */
    VertexId source = -1;
    VertexId sink = -1;
    /* outer face hint from input, as an edge walk; may be empty */
    std::vector<EdgeId> outer_hint;

    int n() const { return (int)names.size(); }
    int m() const {
        int c = 0;
        for (const auto& e : edges) c += e.alive ? 1 : 0;
        return c;
    }

    VertexId add_vertex(std::string name, VertexKind k = VertexKind::Real) {
        names.push_back(std::move(name));
        vkind.push_back(k);
        rotation.emplace_back();
        return (int)names.size() - 1;
    }

    /* appends e at the end of both rotations; callers that care about the
     * embedding position use insert_edge_after instead */
    EdgeId add_edge(VertexId u, VertexId v, EdgeKind k = EdgeKind::Real) {
        EdgeId e = (EdgeId)edges.size();
        edges.push_back({u, v, k, true});
        rotation[u].push_back(e);
        rotation[v].push_back(e);
        return e;
    }

    /* new edge (u,v); at u it goes right after edge au in clockwise order,
     * at v right after av */
    EdgeId insert_edge_after(VertexId u, EdgeId au, VertexId v, EdgeId av,
                             EdgeKind k = EdgeKind::Real);

    void remove_edge(EdgeId e);

    VertexId other(EdgeId e, VertexId v) const {
        const Edge& ed = edges[e];
        return ed.tail == v ? ed.head : ed.tail;
    }

    Dart dart_from(EdgeId e, VertexId tail_of_dart) const {
        return {e, edges[e].tail == tail_of_dart};
    }
    VertexId dart_tail(Dart d) const { return d.forward ? edges[d.edge].tail : edges[d.edge].head; }
    VertexId dart_head(Dart d) const { return d.forward ? edges[d.edge].head : edges[d.edge].tail; }

    /* next dart of the same face: successor of d.edge in the clockwise
     * rotation at d's head, traversed away from that vertex.  Bounded faces
     * come out counterclockwise, the outer face clockwise. */
    Dart face_next(Dart d) const;

    std::vector<EdgeId> in_edges(VertexId v) const;
    std::vector<EdgeId> out_edges(VertexId v) const;
    int degree(VertexId v) const { return (int)rotation[v].size(); }
    int max_degree() const;

    std::optional<VertexId> find_vertex(const std::string& name) const;
};

struct Face {
    std::vector<Dart> darts; /* cyclic walk */
};

struct FaceList {
    std::vector<Face> faces;
    int outer = -1; /* index into faces, -1 if not identified */
};

/* one line of a validation report */
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string message;
};

struct Diagnostics {
    std::vector<CheckResult> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string msg = "") {
        checks.push_back({std::move(name), pass, std::move(msg)});
    }
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return c.name + ": " + c.message;
        return "";
    }
};

/* all face walks of the embedding; identifies the outer face from the
 * hint if present, else as the unique face containing both source and
 * sink (outer stays -1 when that is ambiguous) */
FaceList faces(const PlaneStGraph& g);

/* structural checks: single source/sink, acyclic, rotation consistency,
 * Euler formula, contiguous in/out blocks at every vertex, s and t on the
 * outer face */
Diagnostics validate(const PlaneStGraph& g);

/* successors of u in clockwise order, starting after the incoming block */
std::vector<VertexId> successors_cw(const PlaneStGraph& g, VertexId u);
/* same but the edges */
std::vector<EdgeId> out_edges_cw(const PlaneStGraph& g, VertexId u);
/* predecessors of v in clockwise order of the incoming block */
std::vector<VertexId> predecessors_cw(const PlaneStGraph& g, VertexId v);

/* reachability closure, memoized per source */
class Reachability {
  public:
    explicit Reachability(const PlaneStGraph& g);
    bool reaches(VertexId from, VertexId to) const {
        return (bits_[from][to >> 6] >> (to & 63)) & 1;
    }

  private:
    std::vector<std::vector<uint64_t>> bits_;
};

/* replace e=(u,v) by (u,d),(d,v) keeping both rotation positions; e is
 * reused as the lower half, the returned vertex is d */
VertexId subdivide(PlaneStGraph& g, EdgeId e);

/* insert edge (a,b) inside face f of the current embedding; da/db are
 * darts of that face arriving at a and b (corners are identified by darts
 * so walks visiting a vertex twice stay unambiguous) */
EdgeId add_edge_in_face(PlaneStGraph& g, Dart da, Dart db, EdgeKind k);

/* topological order with lexicographic-smallest tie break; throws
 * input_error on cycles */
std::vector<VertexId> topological_order(const PlaneStGraph& g);

} // namespace updraw
