#pragma once

// Exact integer/rational linear algebra used by the lattice-geometry layer.
// Everything here is arbitrary precision; floating point never enters.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tfib {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;  // row major
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// --- small vector helpers ---------------------------------------------------

Int dot(const IVec& a, const IVec& b);
Rat dot(const QVec& a, const QVec& b);
IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec neg(const IVec& a);
IVec scale(const Int& c, const IVec& a);
bool is_zero(const IVec& a);
Int l1_norm(const IVec& a);

QVec to_rat(const IVec& a);
// Clears denominators and divides by the content; returns the primitive
// integer vector on the same ray (zero maps to zero).
IVec primitive(const QVec& a);
IVec primitive(const IVec& a);
Int content(const IVec& a);  // gcd of entries, nonnegative

std::string to_string(const IVec& a);

// --- exact dense linear algebra ---------------------------------------------

int rank(QMat m);                 // destroys its copy
Rat determinant(QMat m);          // square
std::optional<QMat> inverse(const QMat& m);
// Solves x * A = b (row-vector convention) if a solution exists and the
// solution is unique on the row space; returns nullopt when inconsistent.
std::optional<QVec> solve_left(const QMat& A, const QVec& b);
// Solves A * x = b (column convention).
std::optional<QVec> solve_right(const QMat& A, const QVec& b);

QMat to_rat(const IMat& m);

// --- integer lattice algorithms ----------------------------------------------

// Row-style Hermite normal form of the lattice spanned by the rows.
// Returns a full-rank basis (zero rows dropped): pivots positive, entries
// above each pivot reduced into [0, pivot).
IMat row_hermite(IMat m);

// Basis (as rows) of the lattice { x in Z^n : m * x^T = 0 }, i.e. integer
// vectors annihilated by every row of m.  The result is saturated.
IMat integer_kernel(const IMat& m, int n);

// Saturation of the row span: (span_Q(rows) intersect Z^n) as a lattice basis.
IMat saturate(const IMat& rows, int n);

// Is v in the lattice spanned by the HNF rows?
bool in_lattice(const IMat& hnf_rows, IVec v);

// Extends a *saturated* basis B (r rows in Z^n) to a unimodular n x n matrix
// whose first r rows are B.  Also returns the exact integer inverse.
// Throws std::invalid_argument when B is not saturated or not independent.
struct UnimodularCompletion {
    IMat full;     // n x n, det = +-1, rows 0..r-1 equal B
    IMat inverse;  // exact integer inverse of full
};
UnimodularCompletion complete_to_unimodular(const IMat& basis, int n);

}  // namespace tfib
