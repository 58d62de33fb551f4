#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "torusfib/catalog.hpp"
#include "torusfib/duality.hpp"
#include "torusfib/errors.hpp"

using namespace tfib;

namespace {

std::vector<int> identity_iso(std::size_t n) {
    std::vector<int> iso(n);
    std::iota(iso.begin(), iso.end(), 0);
    return iso;
}

FibrationDatum quintic_datum() { return assign_monodromy(quintic_locus()); }

}  // namespace

TEST_CASE("fibre types dualize in pairs") {
    CHECK(dual_fibre_type(FibreType::II) == FibreType::III);
    CHECK(dual_fibre_type(FibreType::III) == FibreType::II);
    CHECK(dual_fibre_type(FibreType::III5) == FibreType::II5x5);
    CHECK(dual_fibre_type(FibreType::II5x5) == FibreType::III5);
    CHECK(dual_fibre_type(FibreType::Generic) == FibreType::Generic);
    CHECK(dual_fibre_type(FibreType::I) == FibreType::I);
}

TEST_CASE("dual triples are consistent, involutive, and swap the types") {
    for (FibreType t : {FibreType::II, FibreType::III}) {
        const MonodromyTriple a = standard_triple(t);
        const MonodromyTriple d = dualize(a);
        CHECK(vertex_consistent(d.T1, d.T2, d.T3));
        const MonodromyTriple dd = dualize(d);
        CHECK(dd.T1 == a.T1);
        CHECK(dd.T2 == a.T2);
        CHECK(dd.T3 == a.T3);
    }
    // the dual of one standard triple is simultaneously conjugate to the
    // other standard triple: one basis change aligns all three legs at once
    const auto u = conjugating_matrix(dualize(standard_triple(FibreType::II)),
                                      standard_triple(FibreType::III));
    REQUIRE(u.has_value());
    CHECK(is_unimodular(*u));
    const auto v = conjugating_matrix(dualize(standard_triple(FibreType::III)),
                                      standard_triple(FibreType::II));
    CHECK(v.has_value());
}

TEST_CASE("dualizing the quintic fibration swaps strata and negates Euler") {
    const FibrationDatum F = quintic_datum();
    const FibrationDatum D = dualize_fibration(F);

    const VertexCounts cf = classify_vertices(F.locus);
    const VertexCounts cd = classify_vertices(D.locus);
    CHECK(cf.n_ii == 250);
    CHECK(cf.n_iii == 50);
    CHECK(cd.n_ii == 50);
    CHECK(cd.n_iii == 250);
    CHECK(euler_characteristic(F) == -200);
    CHECK(euler_characteristic(D) == 200);

    // same locus combinatorics, same edge count, dualized matrices
    CHECK(D.locus.edges.size() == F.locus.edges.size());
    for (std::size_t e = 0; e < F.edge_monodromy.size(); ++e) {
        CHECK(D.edge_monodromy[e] == dualize(F.edge_monodromy[e]));
    }
    for (std::size_t v = 0; v < F.vertex_triples.size(); ++v) {
        REQUIRE(D.vertex_triples[v].has_value());
        const auto& t = *D.vertex_triples[v];
        CHECK(vertex_consistent(t.T1, t.T2, t.T3));
    }

    // involution, exactly
    const FibrationDatum DD = dualize_fibration(D);
    for (std::size_t v = 0; v < F.locus.vertices.size(); ++v) {
        CHECK(DD.locus.vertices[v].type == F.locus.vertices[v].type);
        CHECK(DD.vertex_triples[v]->T1 == F.vertex_triples[v]->T1);
        CHECK(DD.vertex_triples[v]->T2 == F.vertex_triples[v]->T2);
        CHECK(DD.vertex_triples[v]->T3 == F.vertex_triples[v]->T3);
    }
    for (std::size_t e = 0; e < F.edge_monodromy.size(); ++e) {
        CHECK(DD.edge_monodromy[e] == F.edge_monodromy[e]);
    }
}

TEST_CASE("malformed fibration data is rejected") {
    const FibrationDatum F = quintic_datum();

    SUBCASE("edge monodromy count") {
        FibrationDatum bad = F;
        bad.edge_monodromy.pop_back();
        CHECK_THROWS_AS(dualize_fibration(bad), InconsistentInput);
    }
    SUBCASE("missing triple") {
        FibrationDatum bad = F;
        bad.vertex_triples[7].reset();
        CHECK_THROWS_AS(dualize_fibration(bad), InconsistentInput);
    }
    SUBCASE("non-unimodular edge matrix") {
        FibrationDatum bad = F;
        bad.edge_monodromy[3] = Mat3{{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        CHECK_THROWS_AS(dualize_fibration(bad), InconsistentInput);
    }
    SUBCASE("inconsistent triple") {
        FibrationDatum bad = F;
        const MonodromyTriple t = *bad.vertex_triples[0];
        bad.vertex_triples[0] = MonodromyTriple{t.T1, t.T1, t.T1};
        CHECK_THROWS_AS(dualize_fibration(bad), InconsistentInput);
    }
}

TEST_CASE("the quintic and its dual verify as a mirror pair") {
    const FibrationDatum F = quintic_datum();
    const FibrationDatum D = dualize_fibration(F);
    const MirrorReport r = verify_mirror_pair(F, D, identity_iso(300));
    CHECK(r.ok);
    CHECK(r.structure_violations == 0);
    CHECK(r.type_violations == 0);
    CHECK(r.monodromy_violations == 0);
    CHECK(r.messages.empty());
}

TEST_CASE("the quintic is not its own mirror: one violation per stratum point") {
    const FibrationDatum F = quintic_datum();
    const MirrorReport r = verify_mirror_pair(F, F, identity_iso(300));
    CHECK_FALSE(r.ok);
    CHECK(r.type_violations == 300);
    CHECK(r.structure_violations == 0);
    CHECK(r.monodromy_violations == 0);
    CHECK(!r.messages.empty());
    CHECK(r.messages.size() <= 20);
}

TEST_CASE("broken correspondences are reported, not thrown") {
    const FibrationDatum F = quintic_datum();
    const FibrationDatum D = dualize_fibration(F);

    SUBCASE("wrong size") {
        const MirrorReport r = verify_mirror_pair(F, D, identity_iso(299));
        CHECK_FALSE(r.ok);
        CHECK(r.structure_violations > 0);
    }
    SUBCASE("not injective") {
        auto iso = identity_iso(300);
        iso[5] = 6;
        const MirrorReport r = verify_mirror_pair(F, D, iso);
        CHECK_FALSE(r.ok);
        CHECK(r.structure_violations > 0);
    }
    SUBCASE("transposing two unrelated vertices breaks edges") {
        auto iso = identity_iso(300);
        // vertex 0 is a face-interior point, vertex 299 a junction on a
        // different face; swapping their images mismatches incidences
        std::swap(iso[0], iso[299]);
        const MirrorReport r = verify_mirror_pair(F, D, iso);
        CHECK_FALSE(r.ok);
        CHECK(r.structure_violations > 0);
    }
}

TEST_CASE("dangling legs must map to dangling legs") {
    const BaseComplex B = base_from_polytope(newton_polygon(3));
    std::map<int, SpineGraph> graphs;
    graphs[0] = standard_spine_on(B.faces[0].polygon);
    const FibrationDatum F = assign_monodromy(assemble(B, graphs));
    const FibrationDatum D = dualize_fibration(F);
    const MirrorReport r =
        verify_mirror_pair(F, D, identity_iso(F.locus.vertices.size()));
    CHECK(r.ok);
    CHECK(euler_characteristic(F) == -9);
    CHECK(euler_characteristic(D) == 9);
}
