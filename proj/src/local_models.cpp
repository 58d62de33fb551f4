#include "torusfib/local_models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "torusfib/errors.hpp"

namespace tfib {

namespace {

using Cd = std::complex<double>;
using R3 = std::array<double, 3>;
using C3 = std::array<Cd, 3>;

bool is_x_model(LocalModel m) { return m == LocalModel::T2R_X || m == LocalModel::S1R2_X; }

void validate(const LocalModelParams& p) {
    if (!std::isfinite(p.eps) || !std::isfinite(p.delta) || p.eps < 0.0 || p.delta < 0.0)
        throw std::invalid_argument("model parameters must be finite and nonnegative");
}

// Golden-ratio angle sweep: deterministic, equidistributed phases.
double sweep_angle(int i) {
    double frac = std::fmod(0.6180339887498949 * double(i), 1.0);
    return 2.0 * 3.14159265358979323846 * frac;
}

R3 rho_of_ambient(LocalModel model, const C4& z, double delta_term) {
    switch (model) {
        case LocalModel::T2R_X:
            return {std::norm(z[0]) - std::norm(z[1]), std::norm(z[2]) - std::norm(z[3]),
                    (z[0] * z[1] + z[2] * z[3]).real()};
        case LocalModel::S1R2_X:
            return {z[0].real(), z[1].real(), std::norm(z[2]) - std::norm(z[3])};
        case LocalModel::T2R_Y:
            return {std::norm(z[0]) - std::norm(z[1]) - delta_term,
                    std::norm(z[2]) - std::norm(z[3]) + delta_term,
                    (z[0] * z[1] + z[2] * z[3]).real()};
        case LocalModel::S1R2_Y:
            return {z[0].real(), z[1].real(), std::norm(z[2]) - std::norm(z[3]) + delta_term};
    }
    throw std::logic_error("unreachable");
}

// delta/(1+|t|^2) expressed in the chart at hand: the fiber coordinate of
// chart B is t' = 1/t, so the same function reads delta|t'|^2/(1+|t'|^2).
double delta_term_at(const LocalModelParams& params, const YChartPoint& p) {
    double f2 = std::norm(p.coords[2]);
    if (p.chart == 0) return params.delta / (1.0 + f2);
    return params.delta * f2 / (1.0 + f2);
}

void check_chart(const YChartPoint& p) {
    if (p.chart != 0 && p.chart != 1) throw std::invalid_argument("chart must be 0 or 1");
}

}  // namespace

const char* to_string(LocalModel model) {
    switch (model) {
        case LocalModel::T2R_Y: return "T2R_Y";
        case LocalModel::T2R_X: return "T2R_X";
        case LocalModel::S1R2_Y: return "S1R2_Y";
        case LocalModel::S1R2_X: return "S1R2_X";
    }
    return "?";
}

std::optional<LocalModel> parse_local_model(std::string_view text) {
    std::string up(text);
    for (char& c : up) c = char(std::toupper(static_cast<unsigned char>(c)));
    if (up == "T2R_Y") return LocalModel::T2R_Y;
    if (up == "T2R_X") return LocalModel::T2R_X;
    if (up == "S1R2_Y") return LocalModel::S1R2_Y;
    if (up == "S1R2_X") return LocalModel::S1R2_X;
    return std::nullopt;
}

C4 embed_resolution(const YChartPoint& p) {
    check_chart(p);
    if (p.chart == 0) {
        const Cd &z2 = p.coords[0], &z3 = p.coords[1], &t = p.coords[2];
        return {t * z3, z2, z3, t * z2};
    }
    const Cd &z1 = p.coords[0], &z4 = p.coords[1], &tp = p.coords[2];
    return {z1, tp * z4, tp * z1, z4};
}

YChartPoint other_chart(const YChartPoint& p) {
    check_chart(p);
    const Cd& f = p.coords[2];
    if (std::abs(f) == 0.0)
        throw std::invalid_argument("point lies outside the opposite chart (fiber coordinate 0)");
    C4 z = embed_resolution(p);
    if (p.chart == 0) return YChartPoint{1, {z[0], z[3], 1.0 / f}};
    return YChartPoint{0, {z[1], z[2], 1.0 / f}};
}

std::array<double, 3> rho(const LocalModelParams& params, const C4& z) {
    validate(params);
    if (!is_x_model(params.model))
        throw std::invalid_argument("ambient-coordinate rho is for the X-side models");
    Cd residual = z[0] * z[1] - z[2] * z[3] - Cd{params.eps, 0.0};
    if (std::abs(residual) >= 1e-10) throw NotOnVariety("point does not satisfy z1 z2 - z3 z4 = eps");
    return rho_of_ambient(params.model, z, 0.0);
}

std::array<double, 3> rho(const LocalModelParams& params, const YChartPoint& p) {
    validate(params);
    check_chart(p);
    if (is_x_model(params.model))
        throw std::invalid_argument("chart-point rho is for the resolution-side models");
    return rho_of_ambient(params.model, embed_resolution(p), delta_term_at(params, p));
}

SingularLocusImage singular_locus_image(const LocalModelParams& params, int n) {
    validate(params);
    if (n < 1) throw std::invalid_argument("need at least one sample");

    SingularLocusImage out;
    auto grid = [](int i, int m, double lo, double hi) {
        return (m <= 1) ? 0.5 * (lo + hi) : lo + (hi - lo) * double(i) / double(m - 1);
    };

    switch (params.model) {
        case LocalModel::T2R_X: {
            // Fixed loci of the two circles: {z1=z2=0, z3 z4 = -eps} and
            // {z3=z4=0, z1 z2 = eps}; images are lines in the level planes
            // rho3 = -eps and rho3 = +eps.
            int m = (n + 1) / 2;
            double lo = std::exp(-2.0) - params.eps * params.eps * std::exp(2.0);
            double hi = std::exp(2.0) - params.eps * params.eps * std::exp(-2.0);
            for (int i = 0; i < m; ++i) {
                double u = grid(i, m, -1.0, 1.0);
                Cd ph = std::polar(1.0, sweep_angle(i));
                C4 a{0.0, 0.0, std::exp(u) * ph, -params.eps * std::exp(-u) / ph};
                out.cloud.push_back(rho_of_ambient(params.model, a, 0.0));
                C4 b{std::exp(u) * ph, params.eps * std::exp(-u) / ph, 0.0, 0.0};
                out.cloud.push_back(rho_of_ambient(params.model, b, 0.0));
            }
            out.reference.push_back({"line_34", {{0.0, lo, -params.eps}, {0.0, hi, -params.eps}}});
            out.reference.push_back({"line_12", {{lo, 0.0, params.eps}, {hi, 0.0, params.eps}}});
            break;
        }
        case LocalModel::S1R2_X: {
            // Fixed locus of the circle: {z3=z4=0, z1 z2 = eps}; its image
            // fills the two same-sign lobes 0 <= rho1 rho2 <= eps in the
            // plane rho3 = 0, pinched at the origin.
            for (int i = 0; i < n; ++i) {
                double u = grid(i, n, -1.0, 1.0);
                Cd z1 = std::polar(std::exp(u), sweep_angle(i));
                C4 z{z1, params.eps / z1, 0.0, 0.0};
                out.cloud.push_back(rho_of_ambient(params.model, z, 0.0));
            }
            double s = std::sqrt(params.eps);
            out.reference.push_back({"core", {{-s, -s, 0.0}, {s, s, 0.0}}});
            if (params.eps > 0.0) {
                LocusPiece plus{"boundary+", {}}, minus{"boundary-", {}};
                for (int i = 0; i <= 32; ++i) {
                    double u = grid(i, 33, -1.0, 1.0);
                    double x = s * std::exp(u);
                    plus.polyline.push_back({x, params.eps / x, 0.0});
                    minus.polyline.push_back({-x, -params.eps / x, 0.0});
                }
                out.reference.push_back(plus);
                out.reference.push_back(minus);
            }
            break;
        }
        case LocalModel::T2R_Y: {
            // Five components in the plane rho3 = 0: the exceptional-curve
            // segment G0 from (-delta, delta, 0) to the origin, two rays off
            // its t=0 end (G1, G2) and two off its t=inf end (G3, G4).
            int m = std::max(2, (n + 4) / 5);
            double d = params.delta;
            for (int i = 0; i < m; ++i) {
                Cd ph = std::polar(1.0, sweep_angle(i));
                double v = grid(i, m, -3.0, 3.0);
                out.cloud.push_back(rho(params, YChartPoint{0, {0.0, 0.0, std::exp(v) * ph}}));
                double s = grid(i, m, 0.05, 1.0);
                out.cloud.push_back(rho(params, YChartPoint{0, {s * ph, 0.0, 0.0}}));  // G1
                out.cloud.push_back(rho(params, YChartPoint{0, {0.0, s * ph, 0.0}}));  // G2
                out.cloud.push_back(rho(params, YChartPoint{1, {s * ph, 0.0, 0.0}}));  // G3
                out.cloud.push_back(rho(params, YChartPoint{1, {0.0, s * ph, 0.0}}));  // G4
            }
            out.reference.push_back({"G0", {{-d, d, 0.0}, {0.0, 0.0, 0.0}}});
            out.reference.push_back({"G1", {{-d, d, 0.0}, {-d - 1.0, d, 0.0}}});
            out.reference.push_back({"G2", {{-d, d, 0.0}, {-d, d + 1.0, 0.0}}});
            out.reference.push_back({"G3", {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}}});
            out.reference.push_back({"G4", {{0.0, 0.0, 0.0}, {0.0, -1.0, 0.0}}});
            break;
        }
        case LocalModel::S1R2_Y: {
            // Fixed loci of the circle sit over the two chart origins of the
            // exceptional curve: images are two skew lines, separated by
            // delta in rho3.
            int m = (n + 1) / 2;
            for (int i = 0; i < m; ++i) {
                double s = grid(i, m, -1.0, 1.0);
                // Only the real part is pinned by rho; vary the imaginary
                // part to sweep the full fixed locus.
                Cd val{s, 0.4 * std::sin(sweep_angle(i))};
                out.cloud.push_back(rho(params, YChartPoint{0, {val, 0.0, 0.0}}));
                out.cloud.push_back(rho(params, YChartPoint{1, {val, 0.0, 0.0}}));
            }
            out.reference.push_back({"z2_line", {{0.0, -1.0, params.delta}, {0.0, 1.0, params.delta}}});
            out.reference.push_back({"z1_line", {{-1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}}});
            break;
        }
    }
    return out;
}

std::vector<Junction> junction_points(const SingularLocusImage& image, int min_valence, double tol) {
    struct Cluster {
        R3 pos;
        int count = 0;
    };
    std::vector<Cluster> clusters;
    auto add = [&](const R3& p) {
        for (auto& c : clusters) {
            double d = std::hypot(p[0] - c.pos[0], p[1] - c.pos[1], p[2] - c.pos[2]);
            if (d <= tol) {
                ++c.count;
                return;
            }
        }
        clusters.push_back({p, 1});
    };
    for (const auto& piece : image.reference) {
        if (piece.polyline.size() < 2) continue;
        const R3& a = piece.polyline.front();
        const R3& b = piece.polyline.back();
        if (std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]) <= tol) continue;  // degenerate
        add(a);
        add(b);
    }
    std::vector<Junction> out;
    for (const auto& c : clusters)
        if (c.count >= min_valence) out.push_back({c.pos, c.count});
    std::sort(out.begin(), out.end(), [](const Junction& a, const Junction& b) { return a.pos < b.pos; });
    return out;
}

namespace {

// Chart tangent pushed to C^4 along the embedding.
C4 push_forward(const YChartPoint& p, const C3& u) {
    if (p.chart == 0) {
        const Cd &z2 = p.coords[0], &z3 = p.coords[1], &t = p.coords[2];
        return {u[2] * z3 + t * u[1], u[0], u[1], u[2] * z2 + t * u[0]};
    }
    const Cd &z1 = p.coords[0], &z4 = p.coords[1], &tp = p.coords[2];
    return {u[0], u[2] * z4 + tp * u[1], u[2] * z1 + tp * u[0], u[1]};
}

// Symplectic form on the resolution: restriction of the standard C^4 form
// plus delta times the Fubini-Study form of the fiber coordinate (the same
// expression in either chart).
double omega_y(const LocalModelParams& params, const YChartPoint& p, const C3& u, const C3& v) {
    C4 a = push_forward(p, u);
    C4 b = push_forward(p, v);
    double w = 0.0;
    for (int k = 0; k < 4; ++k) w += (std::conj(a[k]) * b[k]).imag();
    double f2 = std::norm(p.coords[2]);
    w += params.delta * (std::conj(u[2]) * v[2]).imag() / ((1.0 + f2) * (1.0 + f2));
    return w;
}

// Generators of the structure torus in the chart at hand, paired with the
// rho component each one reduces to.
struct GeneratorSpec {
    C3 field;
    int rho_index;
};

std::vector<GeneratorSpec> generators(const LocalModelParams& params, const YChartPoint& p) {
    const Cd i{0.0, 1.0};
    const Cd &c0 = p.coords[0], &c1 = p.coords[1], &c2 = p.coords[2];
    C3 v1 = (p.chart == 0) ? C3{i * c0, 0.0, -i * c2} : C3{-i * c0, 0.0, i * c2};
    C3 v2 = (p.chart == 0) ? C3{0.0, -i * c1, i * c2} : C3{0.0, i * c1, -i * c2};
    if (params.model == LocalModel::T2R_Y) return {{v1, 0}, {v2, 1}};
    return {{v2, 2}};  // S1R2_Y: the (z3, z4) circle reduces to rho3
}

double norm2_real(const YChartPoint& p, const C3& u) {
    C4 a = push_forward(p, u);
    double s = 0.0;
    for (int k = 0; k < 4; ++k) s += std::norm(a[k]);
    s += std::norm(u[2]);
    return s;
}

}  // namespace

double check_reduction_identity(const LocalModelParams& params, const YChartPoint& p,
                                double fd_step) {
    validate(params);
    check_chart(p);
    if (is_x_model(params.model))
        throw std::invalid_argument("the reduction identity is for the resolution-side models");
    if (!(fd_step > 0.0)) throw std::invalid_argument("fd_step must be positive");

    auto gens = generators(params, p);
    double scale = 1.0;
    for (const auto& c : p.coords) scale += std::norm(c);
    if (gens.size() == 2) {
        // Degenerate torus orbit: Gram determinant of the two generators.
        double g11 = norm2_real(p, gens[0].field);
        double g22 = norm2_real(p, gens[1].field);
        C4 a = push_forward(p, gens[0].field), b = push_forward(p, gens[1].field);
        double g12 = 0.0;
        for (int k = 0; k < 4; ++k) g12 += (std::conj(a[k]) * b[k]).real();
        g12 += (std::conj(gens[0].field[2]) * gens[1].field[2]).real();
        if (g11 * g22 - g12 * g12 < 1e-10 * scale * scale)
            throw OnStabilizerLocus("torus orbit degenerates at this point");
    } else {
        if (norm2_real(p, gens[0].field) < 1e-10 * scale)
            throw OnStabilizerLocus("circle orbit degenerates at this point");
    }

    // Real chart basis: real and imaginary unit in each chart coordinate.
    auto basis = [](int a) -> C3 {
        C3 e{};
        e[a / 2] = (a % 2 == 0) ? Cd{1.0, 0.0} : Cd{0.0, 1.0};
        return e;
    };

    double worst = 0.0;
    for (const auto& gen : gens) {
        for (int a = 0; a < 6; ++a) {
            C3 e = basis(a);
            double lhs = omega_y(params, p, gen.field, e);
            YChartPoint plus = p, minus = p;
            plus.coords[a / 2] += (a % 2 == 0) ? Cd{fd_step, 0.0} : Cd{0.0, fd_step};
            minus.coords[a / 2] -= (a % 2 == 0) ? Cd{fd_step, 0.0} : Cd{0.0, fd_step};
            double rp = rho(params, plus)[gen.rho_index];
            double rm = rho(params, minus)[gen.rho_index];
            double rhs = 0.5 * (rp - rm) / (2.0 * fd_step);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

}  // namespace tfib
