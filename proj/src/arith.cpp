#include "torusfib/arith.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace tfib {

Int dot(const IVec& a, const IVec& b) {
    assert(a.size() == b.size());
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IVec add(const IVec& a, const IVec& b) {
    assert(a.size() == b.size());
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec sub(const IVec& a, const IVec& b) {
    assert(a.size() == b.size());
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IVec neg(const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

IVec scale(const Int& c, const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool is_zero(const IVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

Int l1_norm(const IVec& a) {
    Int s = 0;
    for (const Int& x : a) s += abs(x);
    return s;
}

QVec to_rat(const IVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

QMat to_rat(const IMat& m) {
    QMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = to_rat(m[i]);
    return r;
}

Int content(const IVec& a) {
    Int g = 0;
    for (const Int& x : a) g = gcd(g, x);
    return g < 0 ? Int(-g) : g;
}

IVec primitive(const IVec& a) {
    Int g = content(a);
    if (g == 0) return a;
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

IVec primitive(const QVec& a) {
    Int l = 1;
    for (const Rat& x : a) l = lcm(l, denominator(x));
    IVec v(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        Rat scaled = a[i] * l;
        assert(denominator(scaled) == 1);
        v[i] = numerator(scaled);
    }
    return primitive(v);
}

std::string to_string(const IVec& a) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out << ", ";
        out << a[i];
    }
    out << ")";
    return out.str();
}

// --- Gaussian elimination over Q ---------------------------------------------

namespace {

// Reduces m in place to row echelon form; returns pivot column per row used.
std::vector<int> echelon(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(QMat m) { return static_cast<int>(echelon(m).size()); }

Rat determinant(QMat m) {
    size_t n = m.size();
    Rat det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rat inv = Rat(1) / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<QMat> inverse(const QMat& m) {
    size_t n = m.size();
    QMat aug(n, QVec(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("inverse: not square");
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = echelon(aug);
    if (piv.size() != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        if (piv[i] != static_cast<int>(i)) return std::nullopt;
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::optional<QVec> solve_right(const QMat& A, const QVec& b) {
    size_t rows = A.size();
    if (rows == 0) return QVec{};
    size_t cols = A[0].size();
    QMat aug(rows, QVec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = A[i][j];
        aug[i][cols] = b[i];
    }
    auto piv = echelon(aug);
    // Inconsistent if a pivot lands in the augmented column.
    if (!piv.empty() && piv.back() == static_cast<int>(cols)) return std::nullopt;
    QVec x(cols, Rat(0));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
    // Verify (guards non-unique solutions being wrong; free vars are 0).
    for (size_t i = 0; i < rows; ++i) {
        Rat s = 0;
        for (size_t j = 0; j < cols; ++j) s += A[i][j] * x[j];
        if (s != b[i]) return std::nullopt;
    }
    return x;
}

std::optional<QVec> solve_left(const QMat& A, const QVec& b) {
    // x * A = b  <=>  A^T x^T = b^T
    size_t rows = A.size();
    if (rows == 0) {
        for (const Rat& x : b)
            if (x != 0) return std::nullopt;
        return QVec{};
    }
    size_t cols = A[0].size();
    QMat At(cols, QVec(rows));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) At[j][i] = A[i][j];
    return solve_right(At, b);
}

// --- Hermite normal form ------------------------------------------------------

IMat row_hermite(IMat m) {
    if (m.empty()) return m;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // gcd elimination in column c among rows >= r
        while (true) {
            size_t best = rows;
            for (size_t i = r; i < rows; ++i)
                if (m[i][c] != 0 && (best == rows || abs(m[i][c]) < abs(m[best][c]))) best = i;
            if (best == rows) break;  // column already clear
            std::swap(m[best], m[r]);
            bool clear = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                Int q = m[i][c] / m[r][c];  // truncated division is fine for gcd steps
                if (q != 0)
                    for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) clear = false;
            }
            if (clear) break;
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0)
            for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        // reduce entries above the pivot into [0, pivot)
        for (size_t i = 0; i < r; ++i) {
            Int q;
            // floor division
            Int a = m[i][c], p = m[r][c];
            q = a / p;
            if (a % p < 0) q -= 1;
            if (q != 0)
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

IMat integer_kernel(const IMat& m, int n) {
    // Row-reduce [M^T | I_n]; rows whose M^T-part vanished give kernel vectors.
    size_t rows_m = m.size();
    IMat work(n, IVec(rows_m + n, Int(0)));
    for (int i = 0; i < n; ++i) {
        for (size_t j = 0; j < rows_m; ++j) work[i][j] = m[j][i];
        work[i][rows_m + i] = 1;
    }
    // A full HNF pass keeps the transformation unimodular, so the right block
    // of zero-left rows is a (saturated) kernel basis.
    size_t rows = work.size(), cols = rows_m + n;
    size_t r = 0;
    for (size_t c = 0; c < rows_m && r < rows; ++c) {
        while (true) {
            size_t best = rows;
            for (size_t i = r; i < rows; ++i)
                if (work[i][c] != 0 && (best == rows || abs(work[i][c]) < abs(work[best][c]))) best = i;
            if (best == rows) break;
            std::swap(work[best], work[r]);
            bool clear = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (work[i][c] == 0) continue;
                Int q = work[i][c] / work[r][c];
                if (q != 0)
                    for (size_t j = 0; j < cols; ++j) work[i][j] -= q * work[r][j];
                if (work[i][c] != 0) clear = false;
            }
            if (clear) break;
        }
        if (work[r][c] != 0) ++r;
    }
    IMat ker;
    for (size_t i = r; i < rows; ++i) {
        IVec tail(work[i].begin() + rows_m, work[i].end());
        bool head_zero = true;
        for (size_t j = 0; j < rows_m; ++j)
            if (work[i][j] != 0) head_zero = false;
        if (head_zero && !is_zero(tail)) ker.push_back(std::move(tail));
    }
    return row_hermite(std::move(ker));
}

IMat saturate(const IMat& rows, int n) {
    if (rows.empty()) return {};
    IMat perp = integer_kernel(rows, n);
    IMat sat = integer_kernel(perp, n);
    return sat;  // already HNF
}

bool in_lattice(const IMat& hnf_rows, IVec v) {
    // Reduce v by the HNF basis top-down; v is in the lattice iff it
    // reduces to zero (pivot columns strictly increase, zeros below pivots).
    size_t n = v.size();
    for (const IVec& row : hnf_rows) {
        size_t c = 0;
        while (c < n && row[c] == 0) ++c;
        if (c == n) continue;
        if (v[c] % row[c] != 0) return false;
        Int q = v[c] / row[c];
        if (q != 0)
            for (size_t j = 0; j < n; ++j) v[j] -= q * row[j];
    }
    return is_zero(v);
}

UnimodularCompletion complete_to_unimodular(const IMat& basis, int n) {
    const size_t r = basis.size();
    // Column elimination M -> [L | 0] with column ops mirrored on U (so that
    // M_orig * U = current M) and inverse ops on V = U^{-1}.
    IMat M = basis;
    IMat U(n, IVec(n, Int(0))), V(n, IVec(n, Int(0)));
    for (int i = 0; i < n; ++i) U[i][i] = V[i][i] = 1;

    auto swap_cols = [&](size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < r; ++i) std::swap(M[i][a], M[i][b]);
        for (int i = 0; i < n; ++i) std::swap(U[i][a], U[i][b]);
        std::swap(V[a], V[b]);  // inverse of column swap is row swap
    };
    auto negate_col = [&](size_t a) {
        for (size_t i = 0; i < r; ++i) M[i][a] = -M[i][a];
        for (int i = 0; i < n; ++i) U[i][a] = -U[i][a];
        for (int j = 0; j < n; ++j) V[a][j] = -V[a][j];
    };
    // col_b -= q * col_a  (inverse: row_a += q * row_b)
    auto add_col = [&](size_t a, size_t b, const Int& q) {
        if (q == 0) return;
        for (size_t i = 0; i < r; ++i) M[i][b] -= q * M[i][a];
        for (int i = 0; i < n; ++i) U[i][b] -= q * U[i][a];
        for (int j = 0; j < n; ++j) V[a][j] += q * V[b][j];
    };

    for (size_t i = 0; i < r; ++i) {
        while (true) {
            size_t best = static_cast<size_t>(n);
            for (size_t j = i; j < static_cast<size_t>(n); ++j)
                if (M[i][j] != 0 && (best == static_cast<size_t>(n) || abs(M[i][j]) < abs(M[i][best])))
                    best = j;
            if (best == static_cast<size_t>(n))
                throw std::invalid_argument("complete_to_unimodular: rows not independent");
            swap_cols(i, best);
            bool clear = true;
            for (size_t j = i + 1; j < static_cast<size_t>(n); ++j) {
                if (M[i][j] == 0) continue;
                add_col(i, j, M[i][j] / M[i][i]);
                if (M[i][j] != 0) clear = false;
            }
            if (clear) break;
        }
        if (M[i][i] < 0) negate_col(i);
    }
    // Saturated basis <=> the triangular block is unimodular.
    Int det = 1;
    for (size_t i = 0; i < r; ++i) det *= M[i][i];
    if (det != 1)
        throw std::invalid_argument("complete_to_unimodular: basis not saturated");

    // full = [B ; last n-r rows of V];  M_orig * U = [L | 0] and V * U = I, so
    // full * U = [[L, 0], [0, I]] which is unimodular.
    UnimodularCompletion out;
    out.full = basis;
    for (int i = static_cast<int>(r); i < n; ++i) out.full.push_back(V[i]);

    // Exact inverse via rational inversion (entries must come out integral).
    auto inv = inverse(to_rat(out.full));
    if (!inv) throw std::invalid_argument("complete_to_unimodular: singular completion");
    out.inverse.assign(n, IVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (denominator((*inv)[i][j]) != 1)
                throw std::invalid_argument("complete_to_unimodular: non-integer inverse");
            out.inverse[i][j] = numerator((*inv)[i][j]);
        }
    return out;
}

}  // namespace tfib
