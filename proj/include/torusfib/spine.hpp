#pragma once

// The embedded dual graph of a regular subdivision: one vertex per maximal
// cell at its tropical position (min-convention corner locus), one bounded
// edge per interior wall, one unbounded leg per boundary wall.  Also the
// first Betti number, per-boundary-edge leg counts, and a fixed chart
// embedding the graph into a target 2-simplex for figures.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "torusfib/subdivision.hpp"

namespace tfib {

struct SpineVertex {
    int id = 0;
    int cell = 0;  // index of the dual subdivision cell
    QVec pos;      // exact rational tropical coordinates (2)
    std::string label;
};

struct SpineEdge {
    int id = 0;
    int u = 0, v = 0;  // vertex ids
    IVec dir;          // primitive integer direction pointing u -> v
    Int weight = 1;    // lattice length of the dual wall
    std::string label;
};

struct SpineLeg {
    int id = 0;
    int v = 0;             // attached vertex id
    IVec dir;              // primitive direction of the unbounded ray
    Int weight = 1;        // lattice length of the dual boundary wall
    int boundary_edge = 0; // polygon boundary edge the leg is dual to
    IVec wall_u, wall_v;   // endpoints of the dual boundary wall (intrinsic
                           // polygon coordinates, u < v lexicographically)
};

struct SpineGraph {
    std::vector<SpineVertex> vertices;
    std::vector<SpineEdge> edges;
    std::vector<SpineLeg> legs;
};

// Dual graph of S positioned by w.  Requires induces(w, S).
SpineGraph dual_spine(const Subdivision& S, const WeightFunction& w);

// Weighted balancing: at every vertex the incident weight-scaled primitive
// directions (edges oriented outward) sum to zero.
bool is_balanced(const SpineGraph& G);

// First Betti number of the bounded part: E - V + C, with C the number of
// connected components (legs ignored, isolated vertices counted).
int betti1(const SpineGraph& G);

// How many legs exit through each polygon boundary edge.
std::map<int, int> legs_per_polygon_edge(const SpineGraph& G);

// Result of repositioning a spine inside a target triangle.  Combinatorics
// are shared with the source graph; positions are floating point because the
// chart is exponential.
struct EmbeddedGraph {
    SpineGraph graph;
    std::vector<std::array<double, 2>> vertex_pos;  // by vertex index
    std::vector<std::array<double, 2>> leg_end;     // by leg index, on the target boundary
    std::vector<int> leg_target_edge;  // opposite-corner index of that boundary edge, or -1
};

// Chart u -> normalize(1, exp(-u1), exp(-u2)) in barycentric coordinates of
// the target triangle (3 rows of rational plane coordinates).  Leg endpoints
// are the limits of the chart along each ray.
EmbeddedGraph embed_in_simplex(const SpineGraph& G, const QMat& target);

}  // namespace tfib
