#include "torusfib/monodromy.hpp"

#include <deque>
#include <set>
#include <vector>

namespace tfib {

std::string to_string(FibreType t) {
    switch (t) {
        case FibreType::Generic: return "Generic";
        case FibreType::I: return "I";
        case FibreType::II: return "II";
        case FibreType::III: return "III";
        case FibreType::III5: return "III5";
        case FibreType::II5x5: return "II5x5";
    }
    return "?";
}

std::optional<FibreType> parse_fibre_type(const std::string& s) {
    if (s == "Generic") return FibreType::Generic;
    if (s == "I") return FibreType::I;
    if (s == "II") return FibreType::II;
    if (s == "III") return FibreType::III;
    if (s == "III5") return FibreType::III5;
    if (s == "II5x5") return FibreType::II5x5;
    return std::nullopt;
}

Mat3 identity3() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 mul(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Mat3 transpose3(const Mat3& m) {
    Mat3 t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
    return t;
}

long long det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool is_unimodular(const Mat3& m) {
    long long d = det3(m);
    return d == 1 || d == -1;
}

std::optional<Mat3> inverse3(const Mat3& m) {
    long long d = det3(m);
    if (d != 1 && d != -1) return std::nullopt;
    Mat3 adj{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            long long minor[2][2];
            int r = 0;
            for (int a = 0; a < 3; ++a) {
                if (a == j) continue;
                int c = 0;
                for (int b = 0; b < 3; ++b) {
                    if (b == i) continue;
                    minor[r][c++] = m[a][b];
                }
                ++r;
            }
            long long cof = minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0];
            adj[i][j] = (((i + j) % 2 == 0) ? cof : -cof) * d;  // d = 1/d here
        }
    return adj;
}

bool is_unipotent(const Mat3& m) {
    Mat3 n = m;
    for (int i = 0; i < 3; ++i) n[i][i] -= 1;
    Mat3 n3 = mul(mul(n, n), n);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (n3[i][j] != 0) return false;
    return true;
}

MonodromyTriple standard_triple(FibreType t) {
    if (t == FibreType::II)
        return {Mat3{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}},
                Mat3{{{1, 0, -1}, {0, 1, 0}, {0, 0, 1}}},
                Mat3{{{1, -1, 1}, {0, 1, 0}, {0, 0, 1}}}};
    if (t == FibreType::III)
        return {Mat3{{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}},
                Mat3{{{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}}},
                Mat3{{{1, 0, 0}, {-1, 1, 0}, {1, 0, 1}}}};
    throw UnsupportedType("no standard vertex triple for fibre type " + to_string(t));
}

Mat3 single_leg_monodromy() { return {{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}; }

bool vertex_consistent(const Mat3& T1, const Mat3& T2, const Mat3& T3) {
    return mul(mul(T1, T2), T3) == identity3();
}

Mat3 dualize(const Mat3& T) {
    auto inv = inverse3(T);
    if (!inv) throw std::invalid_argument("dualize: matrix is not unimodular");
    return transpose3(*inv);
}

int euler_number(FibreType t) {
    switch (t) {
        case FibreType::Generic: return 0;
        case FibreType::I: return 0;
        case FibreType::II: return -1;
        case FibreType::III: return 1;
        default:
            throw CompositeTypeUndefined("no Euler number for composite fibre type " +
                                         to_string(t));
    }
}

namespace {

std::vector<Mat3> conjugation_generators() {
    std::vector<Mat3> gens;
    // transvections E_ij(+-1)
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            for (int s : {1, -1}) {
                Mat3 g = identity3();
                g[i][j] = s;
                gens.push_back(g);
            }
        }
    // coordinate transpositions
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Mat3 g{};
            for (int k = 0; k < 3; ++k) g[k][k] = 1;
            g[i][i] = g[j][j] = 0;
            g[i][j] = g[j][i] = 1;
            gens.push_back(g);
        }
    // single sign flips
    for (int i = 0; i < 3; ++i) {
        Mat3 g = identity3();
        g[i][i] = -1;
        gens.push_back(g);
    }
    return gens;
}

bool entries_bounded(const Mat3& m, long long bound) {
    for (const auto& row : m)
        for (long long x : row)
            if (x > bound || x < -bound) return false;
    return true;
}

}  // namespace

namespace {

// Breadth-first search over short GL(3,Z) words for U with matches(U) true.
template <typename Pred>
std::optional<Mat3> bfs_conjugator(Pred&& matches, int max_states) {
    const std::vector<Mat3> gens = conjugation_generators();
    std::deque<Mat3> frontier{identity3()};
    std::set<Mat3> seen{identity3()};
    int visited = 0;
    while (!frontier.empty() && visited < max_states) {
        Mat3 u = frontier.front();
        frontier.pop_front();
        ++visited;
        if (matches(u)) return u;
        for (const Mat3& g : gens) {
            Mat3 next = mul(g, u);
            if (!entries_bounded(next, 32)) continue;
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Mat3> conjugating_matrix(const Mat3& T, const Mat3& S, int max_states) {
    // U T = S U  <=>  U T U^{-1} = S.
    return bfs_conjugator([&](const Mat3& u) { return mul(u, T) == mul(S, u); }, max_states);
}

std::optional<Mat3> conjugating_matrix(const MonodromyTriple& T, const MonodromyTriple& S,
                                       int max_states) {
    return bfs_conjugator(
        [&](const Mat3& u) {
            return mul(u, T.T1) == mul(S.T1, u) && mul(u, T.T2) == mul(S.T2, u) &&
                   mul(u, T.T3) == mul(S.T3, u);
        },
        max_states);
}

}  // namespace tfib
