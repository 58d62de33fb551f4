#pragma once

// Integer SL(3,Z)/GL(3,Z) monodromy algebra for torus fibrations: the
// standard matrices attached to the singular fibre types, vertex consistency
// (triple products), inverse-transpose dualization, Euler numbers, and a
// bounded word search for explicit conjugating basis changes.

#include <array>
#include <optional>
#include <string>

#include "torusfib/errors.hpp"

namespace tfib {

using Mat3 = std::array<std::array<long long, 3>, 3>;

// Fibre type tags.  I5 / II5x5-style composite labels are carried opaquely;
// only Generic/I/II/III have numeric invariants.
enum class FibreType { Generic, I, II, III, III5, II5x5 };

std::string to_string(FibreType t);
std::optional<FibreType> parse_fibre_type(const std::string& s);

Mat3 identity3();
Mat3 mul(const Mat3& a, const Mat3& b);
Mat3 transpose3(const Mat3& m);
long long det3(const Mat3& m);
bool is_unimodular(const Mat3& m);       // |det| = 1
std::optional<Mat3> inverse3(const Mat3& m);  // exact; empty unless unimodular
bool is_unipotent(const Mat3& m);        // (m - 1)^3 = 0

struct MonodromyTriple {
    Mat3 T1, T2, T3;
};

// The three standard leg monodromies around a vertex of the given type.
// Only II and III have vertex triples.
MonodromyTriple standard_triple(FibreType t);

// Monodromy around a single type-I leg.
Mat3 single_leg_monodromy();

// True iff T1 T2 T3 = identity (left-to-right composition).
bool vertex_consistent(const Mat3& T1, const Mat3& T2, const Mat3& T3);

// Dual-torus monodromy: inverse transpose.
Mat3 dualize(const Mat3& T);

// Generic -> 0, I -> 0, II -> -1, III -> +1.
int euler_number(FibreType t);

// Searches GL(3,Z) words (transvections, transpositions, sign flips) for U
// with U T U^{-1} = S.  Returns U, or empty if none is found within the
// state budget.
std::optional<Mat3> conjugating_matrix(const Mat3& T, const Mat3& S, int max_states = 200000);

// Simultaneous version: one U conjugating all three matrices at once.
std::optional<Mat3> conjugating_matrix(const MonodromyTriple& T, const MonodromyTriple& S,
                                       int max_states = 200000);

}  // namespace tfib
