#pragma once

#include <string>
#include <vector>

namespace updraw {

/* coordinate scalar for drawings */
using Real = double;

struct Pt {
    Real x = 0;
    Real y = 0;
    bool operator==(const Pt&) const = default;
};

inline Pt operator+(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }
inline Pt operator-(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
inline Real cross(Pt a, Pt b) { return a.x * b.y - a.y * b.x; }
inline Real dot(Pt a, Pt b) { return a.x * b.x + a.y * b.y; }

/* a finished drawing; vertex order defines ids local to the drawing */
struct Drawing {
    struct Vertex {
        std::string name;
        Pt pos;
    };
    struct Edge {
        int tail = -1;
        int head = -1;
        std::vector<Pt> bends; /* tail..head order */
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    /* polyline points of edge e including endpoints */
    std::vector<Pt> polyline(int e) const {
        std::vector<Pt> p;
        p.push_back(vertices[edges[e].tail].pos);
        for (const Pt& b : edges[e].bends) p.push_back(b);
        p.push_back(vertices[edges[e].head].pos);
        return p;
    }
    int find_vertex(const std::string& name) const {
        for (int i = 0; i < (int)vertices.size(); ++i)
            if (vertices[i].name == name) return i;
        return -1;
    }
};

} // namespace updraw
