#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "torusfib/arith.hpp"

using namespace tfib;

TEST_CASE("dot / add / sub / scale / l1") {
    IVec a{Int(1), Int(-2), Int(3)};
    IVec b{Int(4), Int(5), Int(-6)};
    CHECK(dot(a, b) == Int(4 - 10 - 18));
    CHECK(add(a, b) == IVec{Int(5), Int(3), Int(-3)});
    CHECK(sub(a, b) == IVec{Int(-3), Int(-7), Int(9)});
    CHECK(scale(Int(-2), a) == IVec{Int(-2), Int(4), Int(-6)});
    CHECK(l1_norm(a) == Int(6));
    CHECK(is_zero(IVec{Int(0), Int(0)}));
    CHECK_FALSE(is_zero(a));
}

TEST_CASE("primitive vector") {
    CHECK(primitive(IVec{Int(4), Int(-6), Int(10)}) == IVec{Int(2), Int(-3), Int(5)});
    CHECK(primitive(IVec{Int(0), Int(0), Int(-7)}) == IVec{Int(0), Int(0), Int(-1)});
    CHECK(primitive(QVec{Rat(1, 2), Rat(-3, 4)}) == IVec{Int(2), Int(-3)});
    CHECK(primitive(QVec{Rat(0), Rat(5, 3)}) == IVec{Int(0), Int(1)});
}

TEST_CASE("rank and determinant") {
    QMat m{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    CHECK(rank(m) == 2);
    CHECK(determinant(m) == Rat(-2));
    QMat sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(rank(sing) == 1);
    CHECK(determinant(sing) == Rat(0));
}

TEST_CASE("inverse round trip") {
    QMat m{{Rat(2), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(3)}, {Rat(1), Rat(0), Rat(1)}};
    auto inv = inverse(m);
    REQUIRE(inv);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat s(0);
            for (int k = 0; k < 3; ++k) s += m[i][k] * (*inv)[k][j];
            CHECK(s == (i == j ? Rat(1) : Rat(0)));
        }
    CHECK_FALSE(inverse(QMat{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}));
}

TEST_CASE("linear solves") {
    QMat m{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    auto x = solve_right(m, QVec{Rat(5), Rat(11)});  // m x = b
    REQUIRE(x);
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(2));
    auto y = solve_left(m, QVec{Rat(7), Rat(10)});  // y m = b
    REQUIRE(y);
    CHECK((*y)[0] == Rat(1));
    CHECK((*y)[1] == Rat(2));
    // Inconsistent system
    QMat s{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    CHECK_FALSE(solve_right(s, QVec{Rat(1), Rat(3)}));
}

TEST_CASE("hermite normal form and membership") {
    IMat m{{Int(2), Int(4), Int(4)}, {Int(-6), Int(6), Int(12)}, {Int(10), Int(4), Int(16)}};
    IMat h = row_hermite(m);
    // Every original row must be in the HNF lattice and vice versa.
    for (const IVec& r : m) CHECK(in_lattice(h, r));
    CHECK(in_lattice(h, IVec{Int(2), Int(4), Int(4)}));
    CHECK_FALSE(in_lattice(h, IVec{Int(1), Int(0), Int(0)}));
    // Pivots positive, echelon shape.
    for (size_t i = 0; i + 1 < h.size(); ++i) {
        size_t pi = 0, pj = 0;
        while (pi < h[i].size() && h[i][pi] == 0) ++pi;
        while (pj < h[i + 1].size() && h[i + 1][pj] == 0) ++pj;
        CHECK(pi < pj);
        CHECK(h[i][pi] > 0);
    }
}

TEST_CASE("integer kernel") {
    // kernel of (1,1,1) = rank-2 lattice containing (1,-1,0),(0,1,-1)
    IMat ker = integer_kernel({{Int(1), Int(1), Int(1)}}, 3);
    REQUIRE(ker.size() == 2);
    for (const IVec& v : ker) CHECK(dot(v, IVec{Int(1), Int(1), Int(1)}) == Int(0));
    CHECK(in_lattice(ker, IVec{Int(1), Int(-1), Int(0)}));
    CHECK(in_lattice(ker, IVec{Int(0), Int(1), Int(-1)}));
    CHECK_FALSE(in_lattice(ker, IVec{Int(1), Int(0), Int(0)}));
    // full-rank matrix has trivial kernel
    CHECK(integer_kernel({{Int(1), Int(0)}, {Int(0), Int(1)}}, 2).empty());
    // empty matrix: everything
    IMat all = integer_kernel({}, 2);
    CHECK(all.size() == 2);
}

TEST_CASE("saturation") {
    // lattice generated by (2,0),(0,2) saturates to Z^2
    IMat s = saturate({{Int(2), Int(0)}, {Int(0), Int(2)}}, 2);
    REQUIRE(s.size() == 2);
    CHECK(in_lattice(s, IVec{Int(1), Int(0)}));
    CHECK(in_lattice(s, IVec{Int(0), Int(1)}));
    // saturation of (2,4) contains (1,2) but not (1,1)
    IMat t = saturate({{Int(2), Int(4)}}, 2);
    REQUIRE(t.size() == 1);
    CHECK(t[0] == IVec{Int(1), Int(2)});
}

TEST_CASE("unimodular completion") {
    IMat basis{{Int(1), Int(1), Int(1), Int(1), Int(1), Int(1)}};
    auto c = complete_to_unimodular(basis, 6);
    REQUIRE(c.full.size() == 6);
    CHECK(c.full[0] == basis[0]);
    // full * inverse == identity
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Int s(0);
            for (int k = 0; k < 6; ++k) s += c.full[i][k] * c.inverse[k][j];
            CHECK(s == (i == j ? Int(1) : Int(0)));
        }
    QMat q = to_rat(c.full);
    Rat det = determinant(q);
    CHECK((det == Rat(1) || det == Rat(-1)));
    // non-saturated input must be rejected
    CHECK_THROWS_AS(complete_to_unimodular({{Int(2), Int(0)}}, 2), std::invalid_argument);
}
