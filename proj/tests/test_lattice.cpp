#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "torusfib/errors.hpp"
#include "torusfib/lattice.hpp"

using namespace tfib;

namespace {

IVec iv(std::initializer_list<long long> xs) {
    IVec v;
    for (long long x : xs) v.push_back(Int(x));
    return v;
}

// Plücker-style weight polytope on Z^6 mod (1,1,1,1,1,1).
QuotientLattice w_lattice() { return QuotientLattice(6, {iv({1, 1, 1, 1, 1, 1})}); }
IMat w_vertices() {
    return {iv({1, 0, 0, 0, 0, 0}), iv({0, 1, 0, 0, 0, 0}), iv({0, 0, 1, 0, 1, 0}),
            iv({0, 0, 1, 0, 0, 1}), iv({0, 0, 0, 1, 1, 0}), iv({0, 0, 0, 1, 0, 1})};
}

// Its polar dual on Z^6 mod (0,0,1,1,-1,-1).
QuotientLattice I_lattice() { return QuotientLattice(6, {iv({0, 0, 1, 1, -1, -1})}); }
IMat I_vertices() {
    return {iv({1, -3, 1, 1, 0, 0}), iv({-3, 1, 1, 1, 0, 0}), iv({1, 1, 1, -3, 0, 0}),
            iv({1, 1, 0, 0, -3, 1}), iv({1, 1, 0, 0, 1, -3}), iv({1, 1, -3, 1, 0, 0})};
}

const Face* find_face(const LatticePolytope& P, int dim, const std::vector<int>& verts) {
    for (const Face& f : P.face_lattice())
        if (f.dim == dim && f.verts == verts) return &f;
    return nullptr;
}

int facets_through(const LatticePolytope& P, const std::vector<int>& verts) {
    int c = 0;
    for (const Face& f : P.face_lattice())
        if (f.dim == P.dim() - 1 &&
            std::includes(f.verts.begin(), f.verts.end(), verts.begin(), verts.end()))
            ++c;
    return c;
}

}  // namespace

TEST_CASE("quotient lattice canonical representatives") {
    QuotientLattice L(6, {iv({1, 1, 1, 1, 1, 1})});
    CHECK(L.rank() == 5);
    CHECK(L.canonical(iv({1, 0, 0, 0, 0, 0})) == iv({1, 0, 0, 0, 0, 0}));
    CHECK(L.canonical(iv({2, 1, 1, 1, 1, 1})) == iv({1, 0, 0, 0, 0, 0}));
    CHECK(L.same_class(iv({2, 1, 1, 1, 1, 1}), iv({1, 0, 0, 0, 0, 0})));
    CHECK_FALSE(L.same_class(iv({1, 0, 0, 0, 0, 0}), iv({0, 1, 0, 0, 0, 0})));

    QuotientLattice M(6, {iv({0, 0, 1, 1, -1, -1})});
    IVec I1 = iv({1, -3, 1, 1, 0, 0});
    CHECK(M.canonical(add(I1, iv({0, 0, 1, 1, -1, -1}))) == I1);
    CHECK(M.canonical(add(I1, iv({0, 0, -2, -2, 2, 2}))) == I1);

    // Tie-break: both (1,0) and (0,-1) have L1 = 1 mod (1,1); pick the
    // lexicographically larger one.
    QuotientLattice D(2, {iv({1, 1})});
    CHECK(D.canonical(iv({1, 0})) == iv({1, 0}));
    CHECK(D.canonical(iv({0, -1})) == iv({1, 0}));
    CHECK(D.canonical(iv({3, 3})) == iv({0, 0}));

    CHECK_THROWS_AS(QuotientLattice(3, {iv({1, 0, 0}), iv({2, 0, 0})}), std::invalid_argument);
}

TEST_CASE("simplices and basic polytopes") {
    QuotientLattice z2(2);
    auto tri = LatticePolytope::from_vertices(z2, {iv({0, 0}), iv({1, 0}), iv({0, 1})});
    CHECK(tri.dim() == 2);
    CHECK(tri.face_counts_per_dim() == std::vector<int>{3, 3, 1});
    CHECK(tri.integral_points().size() == 3);

    // Redundant input points are dropped.
    auto big = LatticePolytope::from_vertices(
        z2, {iv({0, 0}), iv({1, 0}), iv({2, 0}), iv({0, 2}), iv({1, 1})});
    CHECK(big.vertices() == IMat{iv({0, 0}), iv({0, 2}), iv({2, 0})});

    // Dilation scales lattice point counts.
    CHECK(tri.dilate(Int(3)).integral_points().size() == 10);
    auto square =
        LatticePolytope::from_vertices(z2, {iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
    CHECK(square.dilate(Int(2)).integral_points().size() == 9);

    // One-dimensional polytope with a non-primitive direction.
    auto seg = LatticePolytope::from_vertices(z2, {iv({0, 0}), iv({4, 2})});
    CHECK(seg.dim() == 1);
    CHECK(seg.face_counts_per_dim() == std::vector<int>{2, 1});
    CHECK(seg.integral_points() == IMat{iv({0, 0}), iv({2, 1}), iv({4, 2})});
    CHECK_FALSE(seg.to_intrinsic(iv({1, 0})));
    auto y = seg.to_intrinsic(iv({2, 1}));
    REQUIRE(y);
    CHECK(seg.from_intrinsic(*y) == iv({2, 1}));

    // Point polytope.
    auto pt = LatticePolytope::from_vertices(z2, {iv({3, 5})});
    CHECK(pt.dim() == 0);
    CHECK(pt.integral_points() == IMat{iv({3, 5})});
}

TEST_CASE("newton polygons") {
    CHECK(newton_polygon(1).integral_points().size() == 3);
    CHECK(newton_polygon(3).integral_points().size() == 10);
    CHECK(newton_polygon(5).integral_points().size() == 21);
    CHECK(newton_polygon(2).face_counts_per_dim() == std::vector<int>{3, 3, 1});
    CHECK_THROWS_AS(newton_polygon(0), std::invalid_argument);
}

TEST_CASE("intrinsic chart round trip") {
    auto tri = newton_polygon(4);
    for (const IVec& p : tri.integral_points()) {
        auto y = tri.to_intrinsic(p);
        REQUIRE(y);
        CHECK(tri.from_intrinsic(*y) == p);
    }
}

TEST_CASE("duality senses on a plane triangle") {
    QuotientLattice z2(2);
    auto P = LatticePolytope::from_vertices(z2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})});
    CHECK(P.contains_origin_interior());
    CHECK(P.is_reflexive());

    auto R = P.dual(DualSense::Reflexive);
    CHECK(R.vertices() == IMat{iv({-1, -1}), iv({-1, 2}), iv({2, -1})});
    auto Q = P.dual(DualSense::Polar);
    CHECK(Q.vertices() == IMat{iv({-2, 1}), iv({1, -2}), iv({1, 1})});
    // The two senses differ by negation.
    IMat negR;
    for (const IVec& v : R.vertices()) negR.push_back(neg(v));
    std::sort(negR.begin(), negR.end());
    CHECK(negR == Q.vertices());

    // Double dual returns the original vertex set in either sense.
    CHECK(R.dual(DualSense::Reflexive).same_vertex_set(P));
    CHECK(Q.dual(DualSense::Polar).same_vertex_set(P));
}

TEST_CASE("reflexivity detection") {
    QuotientLattice z2(2);
    auto fat = LatticePolytope::from_vertices(z2, {iv({2, 0}), iv({0, 2}), iv({-2, -2})});
    CHECK(fat.contains_origin_interior());
    CHECK_FALSE(fat.is_reflexive());
    CHECK_THROWS_AS(fat.dual(), NonIntegralDual);

    auto shifted = LatticePolytope::from_vertices(z2, {iv({0, 0}), iv({2, 0}), iv({0, 2})});
    CHECK_FALSE(shifted.contains_origin_interior());  // origin is a vertex
    CHECK_THROWS_AS(shifted.dual(), OriginNotInterior);
    auto off = LatticePolytope::from_vertices(z2, {iv({1, 0}), iv({0, 1}), iv({1, 1})});
    CHECK_FALSE(off.contains_origin_interior());
    CHECK_THROWS_AS(off.is_reflexive(), OriginNotInterior);
}

TEST_CASE("projective 4-space anticanonical pair") {
    QuotientLattice z4(4);
    auto P = LatticePolytope::from_vertices(
        z4, {iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), iv({0, 0, 1, 0}), iv({0, 0, 0, 1}),
             iv({-1, -1, -1, -1})});
    CHECK(P.dim() == 4);
    CHECK(P.face_counts_per_dim() == std::vector<int>{5, 10, 10, 5, 1});
    CHECK(P.is_reflexive());

    auto D = P.dual(DualSense::Reflexive);
    CHECK(D.vertices() == IMat{iv({-1, -1, -1, -1}), iv({-1, -1, -1, 4}), iv({-1, -1, 4, -1}),
                               iv({-1, 4, -1, -1}), iv({4, -1, -1, -1})});
    CHECK(D.is_reflexive());
    CHECK(D.dual(DualSense::Reflexive).same_vertex_set(P));

    // Dual edges have lattice length 5, hence 4 interior points.
    const Face* e = find_face(D, 1, {0, 1});
    REQUIRE(e);
    CHECK(D.integral_points(*e).size() == 6);
}

TEST_CASE("grassmannian weight polytope golden pair") {
    auto W = LatticePolytope::from_vertices(w_lattice(), w_vertices());
    CHECK(W.dim() == 4);
    CHECK(W.face_counts_per_dim() == std::vector<int>{6, 13, 13, 6, 1});

    auto D = W.dual(DualSense::Polar);
    IMat expect = I_vertices();
    for (IVec& v : expect) v = I_lattice().canonical(v);
    std::sort(expect.begin(), expect.end());
    CHECK(D.vertices() == expect);
    CHECK(D.lattice() == I_lattice());

    // Double dual: back to the weight polytope over its own lattice.
    auto DD = D.dual(DualSense::Polar);
    CHECK(DD.lattice() == w_lattice());
    CHECK(DD.same_vertex_set(W));
}

TEST_CASE("grassmannian dual face lattice") {
    auto D = LatticePolytope::from_vertices(I_lattice(), I_vertices());
    CHECK(D.dim() == 4);
    CHECK(D.face_counts_per_dim() == std::vector<int>{6, 13, 13, 6, 1});

    // Sorted vertex order: I2, I1, I6, I4, I5, I3.
    IMat vs = D.vertices();
    IVec I1 = iv({1, -3, 1, 1, 0, 0}), I2 = iv({-3, 1, 1, 1, 0, 0}), I3 = iv({1, 1, 1, -3, 0, 0}),
         I4 = iv({1, 1, 0, 0, -3, 1}), I5 = iv({1, 1, 0, 0, 1, -3}), I6 = iv({1, 1, -3, 1, 0, 0});
    REQUIRE(vs == IMat{I2, I1, I6, I4, I5, I3});

    // All vertex pairs are edges except {I3,I6} and {I4,I5}.
    int edges = 0;
    for (const Face& f : D.face_lattice())
        if (f.dim == 1) ++edges;
    CHECK(edges == 13);
    CHECK(find_face(D, 1, {2, 5}) == nullptr);  // I6,I3
    CHECK(find_face(D, 1, {3, 4}) == nullptr);  // I4,I5
    // One quadrilateral 2-face on I6,I4,I5,I3; the other twelve are triangles.
    const Face* quad = find_face(D, 2, {2, 3, 4, 5});
    REQUIRE(quad);
    int triangles = 0;
    for (const Face& f : D.face_lattice())
        if (f.dim == 2 && f.verts.size() == 3) ++triangles;
    CHECK(triangles == 12);

    // The I1--I2 edge sits on four facets (the degenerate sites); every other
    // edge sits on three.
    CHECK(facets_through(D, {0, 1}) == 4);
    CHECK(facets_through(D, {1, 5}) == 3);

    // Edge interior points, exact canonical representatives.
    const Face* e12 = find_face(D, 1, {0, 1});
    REQUIRE(e12);
    CHECK(D.integral_points(*e12) ==
          IMat{I2, iv({-2, 0, 1, 1, 0, 0}), iv({-1, -1, 1, 1, 0, 0}), iv({0, -2, 1, 1, 0, 0}),
               I1});
    const Face* e13 = find_face(D, 1, {1, 5});
    REQUIRE(e13);
    CHECK(D.integral_points(*e13) ==
          IMat{I1, iv({1, -2, 1, 0, 0, 0}), iv({1, -1, 1, -1, 0, 0}), iv({1, 0, 1, -2, 0, 0}),
               I3});

    // Face point counts: 15 on a triangle, 25 on the quadrilateral.
    const Face* t123 = find_face(D, 2, {0, 1, 5});
    REQUIRE(t123);
    CHECK(D.integral_points(*t123).size() == 15);
    CHECK(D.integral_points(*quad).size() == 25);

    // The weight polytope has the matching quadrilateral 2-face.
    auto W = LatticePolytope::from_vertices(w_lattice(), w_vertices());
    CHECK(find_face(W, 2, {0, 1, 2, 3}) != nullptr);
}

TEST_CASE("euler relation for proper faces") {
    for (auto P : {newton_polygon(2), newton_polygon(5)}) {
        auto c = P.face_counts_per_dim();
        int sum = 0, sign = 1;
        for (int k = 0; k < P.dim(); ++k, sign = -sign) sum += sign * c[k];
        CHECK(sum == 1 - (P.dim() % 2 == 0 ? 1 : -1));
    }
    auto D = LatticePolytope::from_vertices(I_lattice(), I_vertices());
    auto c = D.face_counts_per_dim();
    CHECK(c[0] - c[1] + c[2] - c[3] == 0);
}
