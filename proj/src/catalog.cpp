#include "torusfib/catalog.hpp"

#include <stdexcept>

namespace tfib {

namespace {

IVec iv(std::initializer_list<long long> xs) {
    IVec v;
    for (long long x : xs) v.push_back(Int(x));
    return v;
}

}  // namespace

LatticePolytope simplex_fan_polytope(int n) {
    if (n < 1) throw std::invalid_argument("simplex_fan_polytope: need n >= 1");
    IMat pts;
    for (int i = 0; i < n; ++i) {
        IVec e(n, Int(0));
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    pts.emplace_back(n, Int(-1));
    return LatticePolytope::from_vertices(QuotientLattice(n), pts);
}

LatticePolytope anticanonical_simplex(int n) {
    if (n < 1) throw std::invalid_argument("anticanonical_simplex: need n >= 1");
    IMat pts;
    for (int i = 0; i < n; ++i) {
        IVec e(n, Int(-1));
        e[i] = n;
        pts.push_back(std::move(e));
    }
    pts.emplace_back(n, Int(-1));
    return LatticePolytope::from_vertices(QuotientLattice(n), pts);
}

LatticePolytope gr24_w_polytope() {
    const QuotientLattice lat(6, {iv({1, 1, 1, 1, 1, 1})});
    const IMat pts = {iv({1, 0, 0, 0, 0, 0}), iv({0, 1, 0, 0, 0, 0}),
                      iv({0, 0, 1, 0, 1, 0}), iv({0, 0, 1, 0, 0, 1}),
                      iv({0, 0, 0, 1, 1, 0}), iv({0, 0, 0, 1, 0, 1})};
    return LatticePolytope::from_vertices(lat, pts);
}

LatticePolytope gr24_dual_polytope() {
    const QuotientLattice lat(6, {iv({0, 0, 1, 1, -1, -1})});
    const IMat pts = {iv({1, -3, 1, 1, 0, 0}),  iv({-3, 1, 1, 1, 0, 0}),
                      iv({1, 1, 1, -3, 0, 0}),  iv({1, 1, 0, 0, -3, 1}),
                      iv({1, 1, 0, 0, 1, -3}),  iv({1, 1, -3, 1, 0, 0})};
    return LatticePolytope::from_vertices(lat, pts);
}

namespace {

Rat hexagonal_form(const IVec& y) { return Rat(y[0] * y[0] + y[0] * y[1] + y[1] * y[1]); }

}  // namespace

WeightFunction standard_weights(int d) {
    const LatticePolytope tri = newton_polygon(d);
    WeightFunction w;
    for (const IVec& m : tri.integral_points()) w.values[m] = hexagonal_form(m);
    return w;
}

WeightFunction standard_weights_on(const LatticePolytope& polygon) {
    if (polygon.dim() != 2) {
        throw std::invalid_argument("standard_weights_on: polygon must be 2-dimensional");
    }
    const IMat& y = polygon.vertices_intrinsic();
    const std::size_t nv = y.size();
    if (nv != 3 && nv != 4) {
        throw std::invalid_argument(
            "standard_weights_on: need a lattice triangle or parallelogram");
    }

    // Hexagonal heights are tied to the standard chart, so transport the
    // polygon to standard position first: vertex 0 to the origin, its two
    // side directions to the coordinate axes.
    std::vector<int> nb;
    for (const Face& f : polygon.face_lattice()) {
        if (f.dim != 1) continue;
        if (f.verts[0] == 0) nb.push_back(f.verts[1]);
        if (f.verts[1] == 0) nb.push_back(f.verts[0]);
    }
    if (nb.size() != 2) {
        throw std::invalid_argument("standard_weights_on: vertex 0 must lie on two sides");
    }
    IVec s1 = sub(y[nb[0]], y[0]);
    IVec s2 = sub(y[nb[1]], y[0]);
    Int d1 = content(s1), d2 = content(s2);
    IVec u{s1[0] / d1, s1[1] / d1};
    IVec v{s2[0] / d2, s2[1] / d2};
    Int det = u[0] * v[1] - u[1] * v[0];
    if (det == -1) {
        std::swap(u, v);
        std::swap(d1, d2);
        det = 1;
    }
    if (det != 1) {
        throw std::invalid_argument(
            "standard_weights_on: side directions do not span the lattice");
    }
    if (nv == 3) {
        if (d1 != d2) {
            throw std::invalid_argument(
                "standard_weights_on: triangle sides must have equal lattice length");
        }
    } else {
        const int fourth = 6 - nb[0] - nb[1];
        if (y[fourth] != add(y[0], add(s1, s2))) {
            throw std::invalid_argument("standard_weights_on: quadrilateral is not a parallelogram");
        }
    }

    // Inverse of the column matrix [u v] (determinant 1).
    const auto to_standard = [&](const IVec& x) {
        const Int dx0 = x[0] - y[0][0], dx1 = x[1] - y[0][1];
        return IVec{v[1] * dx0 - v[0] * dx1, -u[1] * dx0 + u[0] * dx1};
    };

    WeightFunction w;
    for (const IVec& m : polygon.integral_points()) {
        const auto yi = polygon.to_intrinsic(m);
        if (!yi) throw std::invalid_argument("standard_weights_on: point outside affine span");
        w.values[m] = hexagonal_form(to_standard(*yi));
    }
    return w;
}

SpineGraph standard_spine_on(const LatticePolytope& polygon) {
    const WeightFunction w = standard_weights_on(polygon);
    return dual_spine(regular_subdivision(polygon, w), w);
}

BaseComplex quintic_base() { return base_from_polytope(anticanonical_simplex(4)); }

BaseComplex gr24_base() { return base_from_polytope(gr24_dual_polytope()); }

namespace {

AssembledLocus locus_of(const BaseComplex& base) {
    std::map<int, SpineGraph> graphs;
    for (std::size_t f = 0; f < base.faces.size(); ++f) {
        graphs[static_cast<int>(f)] = standard_spine_on(base.faces[f].polygon);
    }
    return assemble(base, graphs);
}

}  // namespace

AssembledLocus quintic_locus() { return locus_of(quintic_base()); }

AssembledLocus gr24_locus() { return locus_of(gr24_base()); }

}  // namespace tfib
