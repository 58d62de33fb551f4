#pragma once

// Explicit local fibration models near a conifold point: the smoothed
// threefold X_eps = {z1 z2 - z3 z4 = eps} in C^4 and the small resolution Y
// of X_0 (a line bundle chart pair glued over P^1), each carrying a
// T^2 x R and an S^1 x R^2 fibration given by closed-form invariants rho.
// The module evaluates rho, samples the image of each fibration's singular
// set against a piecewise-linear reference, and verifies the contraction
// identity iota(v) omega = (1/2) d(rho-component) on the resolution side.

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <optional>
#include <vector>

namespace tfib {

enum class LocalModel { T2R_Y, T2R_X, S1R2_Y, S1R2_X };

const char* to_string(LocalModel model);
std::optional<LocalModel> parse_local_model(std::string_view text);

// eps: smoothing parameter (X models); delta: resolution size, the area of
// the exceptional P^1 (Y models).
struct LocalModelParams {
    LocalModel model = LocalModel::T2R_X;
    double eps = 0.0;
    double delta = 0.0;
};

using C4 = std::array<std::complex<double>, 4>;

// Point on the resolution Y in one of its two line-bundle charts:
//   chart 0 ("A"): coords = (z2, z3, t) with z1 = t z3, z4 = t z2;
//   chart 1 ("B"): coords = (z1, z4, t') with z3 = t' z1, z2 = t' z4.
// The charts glue over t' = 1/t.
struct YChartPoint {
    int chart = 0;
    std::array<std::complex<double>, 3> coords{};
};

// Ambient coordinates (z1, z2, z3, z4) of a resolution point; always lands
// on {z1 z2 = z3 z4}.
C4 embed_resolution(const YChartPoint& p);

// Same point in the opposite chart; requires the fiber coordinate nonzero.
YChartPoint other_chart(const YChartPoint& p);

// Fibration invariants.
//   T2R_X : (|z1|^2-|z2|^2, |z3|^2-|z4|^2, Re(z1 z2 + z3 z4))
//   S1R2_X: (Re z1, Re z2, |z3|^2-|z4|^2)
//   T2R_Y : (|z1|^2-|z2|^2 - delta/(1+|t|^2),
//            |z3|^2-|z4|^2 + delta/(1+|t|^2), Re(z1 z2 + z3 z4))
//   S1R2_Y: (Re z1, Re z2, |z3|^2-|z4|^2 + delta/(1+|t|^2))
// The X overload requires the point to satisfy the defining equation
// (residual below 1e-10), else NotOnVariety.
std::array<double, 3> rho(const LocalModelParams& params, const C4& z);
std::array<double, 3> rho(const LocalModelParams& params, const YChartPoint& p);

// One labeled component of the predicted singular-locus image, as a
// polyline in rho-space.
struct LocusPiece {
    std::string label;
    std::vector<std::array<double, 3>> polyline;
};

struct SingularLocusImage {
    std::vector<std::array<double, 3>> cloud;
    std::vector<LocusPiece> reference;
};

// Sweeps the stabilizer locus of the model's torus/circle action with n
// deterministic samples and maps it by rho; the reference carries the
// predicted piecewise-linear image (curved boundaries are sampled fine).
SingularLocusImage singular_locus_image(const LocalModelParams& params, int n);

struct Junction {
    std::array<double, 3> pos;
    int valence = 0;
};

// Clusters reference-piece endpoints (tolerance tol); returns the clusters
// met by at least min_valence piece ends, sorted by position.
std::vector<Junction> junction_points(const SingularLocusImage& image, int min_valence = 3,
                                      double tol = 1e-9);

// Verifies iota(v) omega = (1/2) d rho_k on the resolution for every
// generator v of the model's structure torus, comparing the explicit
// contraction against central finite differences of rho_k; returns the max
// componentwise residual.  Throws OnStabilizerLocus where the generators
// degenerate.
double check_reduction_identity(const LocalModelParams& params, const YChartPoint& p,
                                double fd_step);

}  // namespace tfib
