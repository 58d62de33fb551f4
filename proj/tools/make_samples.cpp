// Regenerates the sample files under data/ from the built-in catalog.
//
// Usage: make_samples [output-dir]   (default: data)
//
// Every file is written in the canonical text format, so regeneration is
// byte-stable and the committed data stays in sync with the library.

#include <filesystem>
#include <iostream>
#include <string>

#include "torusfib/catalog.hpp"
#include "torusfib/io.hpp"
#include "torusfib/lattice.hpp"

using namespace tfib;

namespace {

IVec iv(std::initializer_list<long long> xs) {
    IVec v;
    for (long long x : xs) v.push_back(Int(x));
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(dir);
    const auto save = [&](const std::string& name, const std::string& text) {
        const std::string path = dir + "/" + name;
        write_text_file(path, text);
        std::cout << path << "\n";
    };
    const auto poly_text = [](const LatticePolytope& P, std::optional<DualSense> sense) {
        return to_text(P, [&](std::ostream& os, const LatticePolytope& p) {
            write_polytope(os, p, sense);
        });
    };

    save("cp4_anticanonical.poly", poly_text(anticanonical_simplex(4), std::nullopt));
    save("gr24_dual.poly", poly_text(gr24_w_polytope(), DualSense::Polar));
    save("gr24_deltas.poly", poly_text(gr24_dual_polytope(), DualSense::Polar));
    save("newton_d3.poly", poly_text(newton_polygon(3), std::nullopt));

    IMat sq;
    sq.push_back(iv({0, 0}));
    sq.push_back(iv({1, 0}));
    sq.push_back(iv({1, 1}));
    sq.push_back(iv({0, 1}));
    const LatticePolytope square = LatticePolytope::from_vertices(QuotientLattice(2), sq);
    save("unit_square.poly", poly_text(square, std::nullopt));

    save("d3_standard.weights", to_text(standard_weights(3), [](std::ostream& os,
                                                                const WeightFunction& w) {
        write_weights(os, w);
    }));
    save("square_standard.weights", to_text(standard_weights_on(square), [](std::ostream& os,
                                                                            const WeightFunction& w) {
        write_weights(os, w);
    }));

    const auto locus_to = [](const AssembledLocus& L) {
        return to_text(L, [](std::ostream& os, const AssembledLocus& l) { write_locus(os, l); });
    };
    save("quintic.locus", locus_to(quintic_locus()));
    save("gr24.locus", locus_to(gr24_locus()));
    return 0;
}
