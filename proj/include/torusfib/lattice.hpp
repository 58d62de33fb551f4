#pragma once

// Exact lattice-polytope geometry in ambient dimension <= 6: quotient
// lattices with canonical class representatives, polytope duality in both
// sign senses, face lattices, and integral-point enumeration.
//
// Polytopes may live in a proper affine subspace of their lattice (they are
// full-dimensional in their own affine span); all face computations happen in
// exact intrinsic coordinates of that span, so no genericity assumptions are
// made and no floating point is used anywhere in this header's machinery.

#include "torusfib/arith.hpp"
#include "torusfib/errors.hpp"

#include <optional>
#include <vector>

namespace tfib {

// Sense of the dual polytope of P (origin interior to P required):
//   Reflexive:  P* = { n : <m, n> >= -1 for all m in P }   (default)
//   Polar:      P* = { n : <m, n> <= +1 for all m in P }
// The two differ by global negation; both are exposed because standard data
// sets in the wild are stated in either convention.
enum class DualSense { Reflexive, Polar };

// Z^ambient modulo a saturated sublattice of relations.  Elements are stored
// as integer representatives; `canonical` picks the unique distinguished
// representative of a class (minimal L1 norm, ties broken by picking the
// lexicographically largest vector), which makes equality and ordering of
// classes well defined.
class QuotientLattice {
public:
    QuotientLattice() = default;
    explicit QuotientLattice(int ambient);
    QuotientLattice(int ambient, const IMat& relations);  // saturates + HNF

    int ambient() const { return ambient_; }
    int rank() const { return ambient_ - static_cast<int>(relations_.size()); }
    const IMat& relations() const { return relations_; }

    IVec canonical(const IVec& v) const;
    bool same_class(const IVec& a, const IVec& b) const;
    bool operator==(const QuotientLattice& o) const {
        return ambient_ == o.ambient_ && relations_ == o.relations_;
    }

private:
    int ambient_ = 0;
    IMat relations_;  // HNF rows of the saturated relation lattice
};

// One face of a polytope.  `verts` indexes into LatticePolytope::vertices().
// For facets (dim == polytope dim - 1) `normal`/`offset` give the supporting
// hyperplane <normal, y> <= offset in intrinsic coordinates, normal primitive.
struct Face {
    int dim = 0;
    std::vector<int> verts;
    IVec normal;
    Rat offset = 0;
};

class LatticePolytope {
public:
    LatticePolytope() = default;

    // Builds the convex hull of the given points (arbitrary representatives);
    // redundant points are dropped, so vertices() are exactly the extreme
    // points, canonicalized and lexicographically sorted.
    static LatticePolytope from_vertices(const QuotientLattice& lat, const IMat& points);

    const QuotientLattice& lattice() const { return lattice_; }
    int ambient_dim() const { return lattice_.ambient(); }
    int dim() const { return dim_; }

    const IMat& vertices() const { return verts_ambient_; }          // canonical reps
    const IMat& vertices_intrinsic() const { return verts_y_; }      // exact chart coords

    // Graded face poset, closed under intersection, top face included.
    // Faces are sorted by (dim, vertex ids); `face_id` is the index into the
    // flattened list, stable and documented for the CLI.
    const std::vector<Face>& face_lattice() const;
    std::vector<int> face_counts_per_dim() const;  // size dim()+1

    // All lattice points of the polytope / of one face, lexicographically
    // ordered by canonical ambient representative.
    IMat integral_points() const;
    IMat integral_points(const Face& f) const;

    // Intrinsic chart: y-coordinates of an ambient representative lying in
    // the affine span (nullopt otherwise), and back.
    std::optional<IVec> to_intrinsic(const IVec& ambient_point) const;
    IVec from_intrinsic(const IVec& y) const;  // canonical ambient rep

    // Duality about the lattice origin (which must lie in the affine span and
    // strictly inside the polytope, else OriginNotInterior).  Returns exact
    // integer vertices or throws NonIntegralDual when the dual is not a
    // lattice polytope in the requested sense.
    LatticePolytope dual(DualSense sense = DualSense::Reflexive) const;
    bool is_reflexive() const;  // origin interior + integral dual vertices
    bool contains_origin_interior() const;

    LatticePolytope dilate(const Int& k) const;

    bool same_vertex_set(const LatticePolytope& o) const {
        return lattice_ == o.lattice_ && verts_ambient_ == o.verts_ambient_;
    }

private:
    // Rational dual vertices in intrinsic form space (reflexive sense is the
    // negation of polar).  Shared by dual() and is_reflexive().
    QMat dual_vertices_intrinsic(DualSense sense) const;
    IVec origin_intrinsic() const;  // throws OriginNotInterior if not in span
    void build_faces() const;

    QuotientLattice lattice_;
    int dim_ = -1;

    IMat verts_ambient_;  // canonical reps, sorted lex
    IMat verts_y_;        // aligned intrinsic coordinates

    // chart data: ambient -> quotient coords x in Z^k -> intrinsic y in Z^d
    IMat q_cols_;         // n x k block: x = v * q_cols_
    IMat lift_rows_;      // k x n: x -> representative x * lift_rows_
    IVec chart_origin_;   // o' in Z^k
    IMat dir_basis_;      // d x k saturated direction lattice D
    IMat a2_inv_;         // k x k inverse of the completion of D
    IMat dir_lift_;       // d x n lifted directions (for dual lattice compute)

    mutable std::vector<Face> faces_;  // lazily built
    mutable bool faces_built_ = false;
};

// conv{(0,0),(d,0),(0,d)} in Z^2 with its (d+1)(d+2)/2 lattice points.
LatticePolytope newton_polygon(int d);

}  // namespace tfib
