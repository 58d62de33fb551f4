#pragma once

// Regular subdivisions of Newton polygons induced by rational weight
// functions (lower convex hulls of lifted lattice points), unimodularity
// predicates, chamber-membership tests, and diagonal flips.

#include <map>
#include <vector>

#include "torusfib/lattice.hpp"

namespace tfib {

// Rational lifting heights, one per lattice point of a Newton polygon.
// Keys are ambient lattice vectors; any class representative is accepted
// and canonicalized on use.
struct WeightFunction {
    std::map<IVec, Rat> values;
};

// A maximal 2-cell: its extreme lattice points in counterclockwise order,
// in the polygon's intrinsic plane coordinates.
struct Cell {
    IMat corners;
};

// A 1-cell.  Endpoints are normalized so u < v lexicographically.  Interior
// walls bound two cells (cell0 < cell1); boundary walls bound one and record
// the polygon boundary edge (index among the polygon's dim-1 faces in
// face_lattice() order) they lie on.
struct Wall {
    IVec u, v;
    int cell0 = -1;
    int cell1 = -1;          // -1 for boundary walls
    int boundary_edge = -1;  // -1 for interior walls
};

struct Subdivision {
    LatticePolytope polygon;
    std::vector<Cell> cells;
    std::vector<Wall> walls;
};

// Projection of the lower convex hull of {(m, w(m))}; cells are exactly the
// domains of linearity.  Ties (non-generic w) keep the coarser cell.
Subdivision regular_subdivision(const LatticePolytope& polygon, const WeightFunction& w);

// True iff every cell is a lattice triangle of normalized area 1.
bool is_unimodular_triangulation(const Subdivision& S);

// Secondary-fan chamber membership: does w induce exactly this subdivision?
bool induces(const WeightFunction& w, const Subdivision& S);

// Replace the two triangles around an interior wall by the opposite
// diagonal's pair.  Involutive.
Subdivision diagonal_flip(const Subdivision& S, const Wall& wall);

// Locate a wall by its (unordered) endpoint pair; -1 if absent.
int find_wall(const Subdivision& S, const IVec& a, const IVec& b);

// Rebuild the wall list from a cell list (shared by construction, flips and
// deserialization).
std::vector<Wall> build_walls(const LatticePolytope& polygon, const std::vector<Cell>& cells);

}  // namespace tfib
