#pragma once

// Ready-made standard objects: the projective-space simplices, the
// Grassmannian Gr(2,4) weight polytope and its polar dual, the hexagonal
// weight function whose regular subdivision is the honeycomb triangulation,
// and the fully assembled singular loci built from them.

#include "torusfib/assembly.hpp"
#include "torusfib/lattice.hpp"
#include "torusfib/spine.hpp"
#include "torusfib/subdivision.hpp"

namespace tfib {

// conv{e_1, ..., e_n, -(1,...,1)} in Z^n: the fan polytope of P^n.
LatticePolytope simplex_fan_polytope(int n);

// Its reflexive dual conv{(n+1)e_i - (1,...,1), -(1,...,1)}; the 2-faces are
// lattice triangles of side n+1.
LatticePolytope anticanonical_simplex(int n);

// The Gr(2,4) weight polytope (octahedron image) on Z^6 mod (1,1,1,1,1,1).
LatticePolytope gr24_w_polytope();

// Its polar dual on Z^6 mod (0,0,1,1,-1,-1); one edge lies on four 2-faces.
LatticePolytope gr24_dual_polytope();

// Hexagonal heights m1^2 + m1*m2 + m2^2 on the side-d Newton triangle; the
// induced subdivision is the honeycomb triangulation.
WeightFunction standard_weights(int d);

// The hexagonal form transported to an equilateral lattice triangle or a
// parallelogram via the unimodular map taking it to standard position; the
// induced subdivision is the honeycomb triangulation of that polygon, with
// side-length-many legs through each boundary edge.
WeightFunction standard_weights_on(const LatticePolytope& polygon);

// dual_spine of the subdivision induced by standard_weights_on.
SpineGraph standard_spine_on(const LatticePolytope& polygon);

// 2-skeleton bases of the two running examples.
BaseComplex quintic_base();  // boundary of anticanonical_simplex(4)
BaseComplex gr24_base();     // boundary of gr24_dual_polytope()

// Standard spines on every 2-face, glued.
AssembledLocus quintic_locus();
AssembledLocus gr24_locus();

}  // namespace tfib
