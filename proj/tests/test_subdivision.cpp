#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "torusfib/errors.hpp"
#include "torusfib/subdivision.hpp"

using namespace tfib;

namespace {

IVec iv(std::initializer_list<long long> xs) {
    IVec v;
    for (long long x : xs) v.push_back(Int(x));
    return v;
}

// Honeycomb-inducing quadratic heights w(m) = m1^2 + m1 m2 + m2^2.
WeightFunction quadratic_weights(const LatticePolytope& P) {
    WeightFunction w;
    for (const IVec& p : P.integral_points())
        w.values[p] = Rat(p[0] * p[0] + p[0] * p[1] + p[1] * p[1]);
    return w;
}

WeightFunction zero_weights(const LatticePolytope& P) {
    WeightFunction w;
    for (const IVec& p : P.integral_points()) w.values[p] = Rat(0);
    return w;
}

std::set<IMat> corner_sets(const Subdivision& S) {
    std::set<IMat> out;
    for (const Cell& c : S.cells) {
        IMat m = c.corners;
        std::sort(m.begin(), m.end());
        out.insert(m);
    }
    return out;
}

}  // namespace

TEST_CASE("quadratic weights give the standard unimodular triangulation") {
    for (int d : {1, 2, 3, 5}) {
        auto P = newton_polygon(d);
        auto S = regular_subdivision(P, quadratic_weights(P));
        CHECK(static_cast<int>(S.cells.size()) == d * d);
        CHECK(is_unimodular_triangulation(S));
        CHECK(induces(quadratic_weights(P), S));
        // every wall bounds one or two cells, and interior/boundary walls are
        // tagged consistently
        for (const Wall& w : S.walls) {
            if (w.cell1 >= 0) {
                CHECK(w.boundary_edge == -1);
                CHECK(w.cell0 < w.cell1);
            } else {
                CHECK(w.boundary_edge >= 0);
            }
        }
    }
}

TEST_CASE("flat weights give the trivial subdivision") {
    auto P = newton_polygon(2);
    auto S = regular_subdivision(P, zero_weights(P));
    REQUIRE(S.cells.size() == 1);
    CHECK(S.cells[0].corners == IMat{iv({0, 0}), iv({2, 0}), iv({0, 2})});
    CHECK_FALSE(is_unimodular_triangulation(S));  // area 4
    for (const Wall& w : S.walls) CHECK(w.cell1 == -1);
    CHECK(S.walls.size() == 3);  // one wall per polygon edge
}

TEST_CASE("unit square splits along the lifted diagonal") {
    QuotientLattice z2(2);
    auto P = LatticePolytope::from_vertices(
        z2, {iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
    WeightFunction w;
    w.values[iv({0, 0})] = Rat(0);
    w.values[iv({1, 0})] = Rat(0);
    w.values[iv({0, 1})] = Rat(0);
    w.values[iv({1, 1})] = Rat(1);
    auto S = regular_subdivision(P, w);
    REQUIRE(S.cells.size() == 2);
    std::set<IMat> expect{{iv({0, 0}), iv({0, 1}), iv({1, 0})},
                          {iv({0, 1}), iv({1, 0}), iv({1, 1})}};
    CHECK(corner_sets(S) == expect);
    CHECK(find_wall(S, iv({1, 0}), iv({0, 1})) >= 0);
    CHECK(is_unimodular_triangulation(S));
}

TEST_CASE("weight domain is validated") {
    auto P = newton_polygon(2);
    WeightFunction missing = quadratic_weights(P);
    missing.values.erase(iv({1, 1}));
    CHECK_THROWS_AS(regular_subdivision(P, missing), DomainMismatch);
    WeightFunction extra = quadratic_weights(P);
    extra.values[iv({5, 5})] = Rat(1);
    CHECK_THROWS_AS(regular_subdivision(P, extra), DomainMismatch);
}

TEST_CASE("chamber membership") {
    auto P = newton_polygon(3);
    auto w = quadratic_weights(P);
    auto S = regular_subdivision(P, w);
    CHECK(induces(w, S));
    CHECK_FALSE(induces(zero_weights(P), S));
    // adding an affine function never changes the chamber
    WeightFunction affine = w;
    for (auto& [p, v] : affine.values) v += Rat(3) + Rat(2) * Rat(p[0]) - Rat(p[1]);
    CHECK(induces(affine, S));
    auto S2 = regular_subdivision(P, affine);
    CHECK(corner_sets(S2) == corner_sets(S));
}

TEST_CASE("ties keep the coarser cell") {
    // Flat boundary, one lowered interior point: four area-2 cells whose
    // edges absorb the midpoints.
    QuotientLattice z2(2);
    auto P = LatticePolytope::from_vertices(
        z2, {iv({0, 0}), iv({2, 0}), iv({0, 2}), iv({2, 2})});
    WeightFunction w = zero_weights(P);
    w.values[iv({1, 1})] = Rat(-1);
    auto S = regular_subdivision(P, w);
    CHECK(S.cells.size() == 4);
    for (const Cell& c : S.cells) CHECK(c.corners.size() == 3);
    CHECK_FALSE(is_unimodular_triangulation(S));
}

TEST_CASE("square flips between its two triangulations") {
    QuotientLattice z2(2);
    auto P = LatticePolytope::from_vertices(
        z2, {iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
    WeightFunction w;
    w.values[iv({0, 0})] = Rat(0);
    w.values[iv({1, 0})] = Rat(0);
    w.values[iv({0, 1})] = Rat(0);
    w.values[iv({1, 1})] = Rat(1);
    auto S = regular_subdivision(P, w);
    int wi = find_wall(S, iv({1, 0}), iv({0, 1}));
    REQUIRE(wi >= 0);
    auto F = diagonal_flip(S, S.walls[wi]);
    std::set<IMat> expect{{iv({0, 0}), iv({0, 1}), iv({1, 1})},
                          {iv({0, 0}), iv({1, 0}), iv({1, 1})}};
    CHECK(corner_sets(F) == expect);
    // flip back along the new diagonal: involution
    int wj = find_wall(F, iv({0, 0}), iv({1, 1}));
    REQUIRE(wj >= 0);
    CHECK(corner_sets(diagonal_flip(F, F.walls[wj])) == corner_sets(S));
}

TEST_CASE("a bumped wall flips exactly that wall") {
    auto P = newton_polygon(3);
    auto w = quadratic_weights(P);
    auto S = regular_subdivision(P, w);
    IVec a = iv({1, 1}), b = iv({0, 2});
    int wi = find_wall(S, a, b);
    REQUIRE(wi >= 0);
    auto F = diagonal_flip(S, S.walls[wi]);
    CHECK(is_unimodular_triangulation(F));
    CHECK(static_cast<int>(F.cells.size()) == 9);
    // raising the two wall endpoints realizes the flipped triangulation
    WeightFunction bumped = w;
    bumped.values[a] += Rat(3, 4);
    bumped.values[b] += Rat(3, 4);
    CHECK(induces(bumped, F));
    CHECK(corner_sets(regular_subdivision(P, bumped)) == corner_sets(F));
    // the flipped wall is gone, the opposite diagonal is present
    CHECK(find_wall(F, a, b) == -1);
    CHECK(find_wall(F, iv({0, 1}), iv({1, 2})) >= 0);
}

TEST_CASE("flip error cases") {
    auto P = newton_polygon(3);
    auto S = regular_subdivision(P, quadratic_weights(P));
    int bi = find_wall(S, iv({0, 0}), iv({1, 0}));
    REQUIRE(bi >= 0);
    CHECK_THROWS_AS(diagonal_flip(S, S.walls[bi]), WallOnBoundary);

    // Two triangles whose union is degenerate (three collinear corners).
    auto T = LatticePolytope::from_vertices(QuotientLattice(2),
                                            {iv({0, 0}), iv({2, 0}), iv({0, 2})});
    Subdivision bad;
    bad.polygon = T;
    bad.cells.push_back({IMat{iv({0, 0}), iv({2, 0}), iv({1, 1})}});
    bad.cells.push_back({IMat{iv({0, 0}), iv({1, 1}), iv({0, 2})}});
    bad.walls = build_walls(T, bad.cells);
    int di = find_wall(bad, iv({0, 0}), iv({1, 1}));
    REQUIRE(di >= 0);
    CHECK_THROWS_AS(diagonal_flip(bad, bad.walls[di]), NonConvexQuad);
}
