#include "torusfib/flow.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "torusfib/errors.hpp"
#include "torusfib/rng.hpp"

namespace tfib {

namespace {

using Cd = std::complex<double>;
using Vec4c = Eigen::Vector4cd;
using Mat4c = Eigen::Matrix4cd;

void validate(const QuinticFamilySpec& spec) {
    if (spec.coefficients.empty()) throw std::invalid_argument("quintic spec has no monomials");
    for (const auto& [m, a] : spec.coefficients) {
        (void)a;
        int deg = 0;
        for (int e : m) {
            if (e < 0) throw std::invalid_argument("negative exponent in quintic spec");
            deg += e;
        }
        if (deg != 5) throw std::invalid_argument("non-quintic monomial in spec");
        if (m == std::array<int, 5>{1, 1, 1, 1, 1})
            throw std::invalid_argument("the (1,1,1,1,1) slot is the family parameter psi");
    }
}

Cd monomial(const std::array<int, 5>& m, const C5& z) {
    Cd v{1.0, 0.0};
    for (int i = 0; i < 5; ++i)
        for (int e = 0; e < m[i]; ++e) v *= z[i];
    return v;
}

// p_a together with the total monomial magnitude (for relative pole tests).
std::pair<Cd, double> pa_with_scale(const QuinticFamilySpec& spec, const C5& z) {
    Cd pa{0.0, 0.0};
    double scale = 0.0;
    for (const auto& [m, a] : spec.coefficients) {
        Cd term = a * monomial(m, z);
        pa += term;
        scale += std::abs(term);
    }
    return {pa, scale};
}

constexpr double kPoleRel = 1e-12;

// --- affine chart machinery -------------------------------------------------
//
// Chart k is {z_k = 1} with coordinates zeta = (z_j)_{j != k}, j increasing.

struct Chart {
    int k = 0;
    Vec4c zeta;
};

int argmax_abs(const C5& z) {
    int k = 0;
    double best = std::abs(z[0]);
    for (int i = 1; i < 5; ++i) {
        double a = std::abs(z[i]);
        if (a > best) {
            best = a;
            k = i;
        }
    }
    return k;
}

Chart to_chart(const C5& z) {
    Chart c;
    c.k = argmax_abs(z);
    if (std::abs(z[c.k]) == 0.0) throw std::invalid_argument("zero projective point");
    int j = 0;
    for (int i = 0; i < 5; ++i)
        if (i != c.k) c.zeta[j++] = z[i] / z[c.k];
    return c;
}

C5 from_chart(const Chart& c) {
    C5 z;
    int j = 0;
    for (int i = 0; i < 5; ++i) z[i] = (i == c.k) ? Cd{1.0, 0.0} : c.zeta[j++];
    return z;
}

C5 sup_normalize(const C5& z) {
    int k = argmax_abs(z);
    C5 out;
    for (int i = 0; i < 5; ++i) out[i] = z[i] / z[k];
    return out;
}

// s and its holomorphic chart derivatives sigma_j = ds/dzeta_j.
struct SDeriv {
    Cd s;
    Vec4c sigma;
};

// Value and chart gradient of one homogeneous polynomial given as monomials.
template <typename Terms>
std::pair<Cd, Vec4c> poly_with_grad(const Terms& terms, const Chart& c) {
    C5 z = from_chart(c);
    Cd val{0.0, 0.0};
    Vec4c grad = Vec4c::Zero();
    for (const auto& [m, a] : terms) {
        // Coordinate powers, so each partial derivative is assembled exactly
        // even when some zeta_j vanishes.
        std::array<Cd, 5> pw;
        for (int i = 0; i < 5; ++i) {
            Cd p{1.0, 0.0};
            for (int e = 0; e < m[i]; ++e) p *= z[i];
            pw[i] = p;
        }
        Cd full = a;
        for (int i = 0; i < 5; ++i) full *= pw[i];
        val += full;
        int j = 0;
        for (int i = 0; i < 5; ++i) {
            if (i == c.k) continue;
            if (m[i] > 0) {
                Cd d = a * double(m[i]);
                for (int l = 0; l < 5; ++l) {
                    if (l == i) {
                        for (int e = 0; e < m[i] - 1; ++e) d *= z[l];
                    } else {
                        d *= pw[l];
                    }
                }
                grad[j] += d;
            }
            ++j;
        }
    }
    return {val, grad};
}

SDeriv s_with_deriv(const QuinticFamilySpec& spec, const Chart& c) {
    auto [pa, grad_a] = poly_with_grad(spec.coefficients, c);
    std::array<std::pair<std::array<int, 5>, Cd>, 1> inf_terms{
        {{std::array<int, 5>{1, 1, 1, 1, 1}, Cd{1.0, 0.0}}}};
    auto [pinf, grad_inf] = poly_with_grad(inf_terms, c);

    double scale = 0.0;
    {
        C5 z = from_chart(c);
        scale = pa_with_scale(spec, z).second;
    }
    if (std::abs(pa) <= kPoleRel * std::max(scale, 1e-300)) throw PoleOfS("p_a vanishes at the requested point");

    SDeriv out;
    out.s = pinf / pa;
    out.sigma = (grad_inf * pa - pinf * grad_a) / (pa * pa);
    return out;
}

// Fubini-Study metric matrix in the chart:
//   G = ((1+|zeta|^2) I - conj(zeta) zeta^T) / (1+|zeta|^2)^2,
// with g(U,V) = Re(V^dag G U) and omega(U,V) = -Im(V^dag G U).
Mat4c fubini_study(const Vec4c& zeta) {
    double r2 = zeta.squaredNorm();
    Mat4c G = (1.0 + r2) * Mat4c::Identity() - zeta.conjugate() * zeta.transpose();
    return G / ((1.0 + r2) * (1.0 + r2));
}

struct Gradient {
    Vec4c grad_f;   // metric gradient of f = Re s
    double norm2;   // g(grad f, grad f)
    Cd s;
};

// grad(f) solves G * grad = conj(sigma); then g(grad,grad) = Re(grad^dag conj(sigma)).
Gradient gradient_f(const QuinticFamilySpec& spec, const Chart& c) {
    SDeriv sd = s_with_deriv(spec, c);
    Mat4c G = fubini_study(c.zeta);
    Gradient g;
    g.s = sd.s;
    g.grad_f = G.fullPivLu().solve(sd.sigma.conjugate());
    g.norm2 = (g.grad_f.adjoint() * sd.sigma.conjugate())(0).real();
    return g;
}

}  // namespace

std::complex<double> evaluate_pa(const QuinticFamilySpec& spec, const C5& z) {
    validate(spec);
    return pa_with_scale(spec, z).first;
}

std::complex<double> evaluate_pinf(const C5& z) {
    Cd p{1.0, 0.0};
    for (const auto& zi : z) p *= zi;
    return p;
}

std::complex<double> evaluate_ppsi(const QuinticFamilySpec& spec, const C5& z) {
    validate(spec);
    return pa_with_scale(spec, z).first + spec.psi * evaluate_pinf(z);
}

std::complex<double> evaluate_s(const QuinticFamilySpec& spec, const C5& z) {
    validate(spec);
    auto [pa, scale] = pa_with_scale(spec, z);
    if (std::abs(pa) <= kPoleRel * std::max(scale, 1e-300)) throw PoleOfS("p_a vanishes at the requested point");
    return evaluate_pinf(z) / pa;
}

FlowTrajectory flow_point(const QuinticFamilySpec& spec, const C5& z0, double target_f,
                          double tol, const FlowOptions& opts) {
    validate(spec);
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    Chart chart = to_chart(z0);
    Gradient g0 = gradient_f(spec, chart);
    if (std::abs(g0.s.imag()) > tol)
        throw std::invalid_argument("start point must satisfy Im(s) = 0 within tol");

    FlowTrajectory traj;
    auto record = [&](double t, const Chart& c, const Cd& s) {
        traj.samples.push_back(FlowSample{t, sup_normalize(from_chart(c)), s});
        traj.max_im_s = std::max(traj.max_im_s, std::abs(s.imag()));
    };
    record(0.0, chart, g0.s);

    // With V = grad(f)/|grad f|^2 the exact flow has df/dt = 1, so remaining
    // f-displacement and remaining time coincide and steps can be sized
    // directly in terms of the f gap still to close.
    auto field = [&](const Vec4c& zeta) -> Vec4c {
        Chart c{chart.k, zeta};
        Gradient g = gradient_f(spec, c);
        double crit_scale = 1.0 + std::norm(g.s);
        if (g.norm2 < opts.critical_threshold * crit_scale)
            throw HitCriticalSet("gradient of f vanishes along the flow");
        return g.grad_f / g.norm2;
    };

    double t = 0.0;
    Cd s_cur = g0.s;
    double drift_allow = std::abs(g0.s.imag()) + 2.0 * tol;

    while (std::abs(target_f - s_cur.real()) > 0.1 * tol) {
        if (traj.steps_accepted + traj.steps_rejected >= opts.max_steps)
            throw StepLimitExceeded("flow did not reach the target f within the step budget");

        double remaining = target_f - s_cur.real();
        // Far from the target march at h_max; close to it halve the gap per
        // step, so the per-step truncation error (order h^5) can never carry
        // f past the target and the approach stays one-sided.
        double h = (std::abs(remaining) > opts.h_max) ? std::copysign(opts.h_max, remaining)
                                                      : 0.5 * remaining;

        bool accepted = false;
        while (!accepted) {
            if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(target_f)))
                throw StepLimitExceeded("step size underflow while controlling Im(s) drift");
            // Classical RK4 on dzeta/dt = V(zeta).
            Vec4c k1 = field(chart.zeta);
            Vec4c k2 = field(chart.zeta + 0.5 * h * k1);
            Vec4c k3 = field(chart.zeta + 0.5 * h * k2);
            Vec4c k4 = field(chart.zeta + h * k3);
            Vec4c next = chart.zeta + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

            Chart trial{chart.k, next};
            Gradient gt = gradient_f(spec, trial);
            if (std::abs(gt.s.imag()) > drift_allow) {
                ++traj.steps_rejected;
                if (traj.steps_accepted + traj.steps_rejected >= opts.max_steps)
                    throw StepLimitExceeded("flow did not reach the target f within the step budget");
                h *= 0.5;
                continue;
            }
            chart = trial;
            s_cur = gt.s;
            t += h;
            ++traj.steps_accepted;
            accepted = true;
        }

        // Keep chart coordinates bounded: re-center on the currently largest
        // homogeneous coordinate once any |zeta_j| grows past 2.
        double m = 0.0;
        for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(chart.zeta[j]));
        if (m > 2.0) {
            Chart fresh = to_chart(from_chart(chart));
            if (fresh.k != chart.k) ++traj.chart_switches;
            chart = fresh;
        }

        record(t, chart, s_cur);
    }
    return traj;
}

double check_hamiltonian_equality(const QuinticFamilySpec& spec, const C5& z, double fd_step) {
    validate(spec);
    if (!(fd_step > 0.0)) throw std::invalid_argument("fd_step must be positive");

    Chart chart = to_chart(z);
    Gradient g = gradient_f(spec, chart);
    Mat4c G = fubini_study(chart.zeta);

    // Real coordinates x in R^8: x_{2j} = Re zeta_j, x_{2j+1} = Im zeta_j.
    auto unit = [](int a) -> Vec4c {
        Vec4c e = Vec4c::Zero();
        e[a / 2] = (a % 2 == 0) ? Cd{1.0, 0.0} : Cd{0.0, 1.0};
        return e;
    };
    auto omega = [&](const Vec4c& u, const Vec4c& v) -> double {
        return -((v.adjoint() * (G * u))(0)).imag();
    };

    Eigen::Matrix<double, 8, 8> Om;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) Om(a, b) = omega(unit(a), unit(b));

    // dh by central differences of h = Im s.
    Eigen::Matrix<double, 8, 1> dh;
    for (int a = 0; a < 8; ++a) {
        Chart plus = chart, minus = chart;
        plus.zeta += fd_step * unit(a);
        minus.zeta -= fd_step * unit(a);
        double hp = s_with_deriv(spec, plus).s.imag();
        double hm = s_with_deriv(spec, minus).s.imag();
        dh(a) = (hp - hm) / (2.0 * fd_step);
    }

    // Hamiltonian field of h: omega(H, .) = dh(.), i.e. Om^T H = dh in the
    // real basis.
    Eigen::Matrix<double, 8, 1> H = Om.transpose().fullPivLu().solve(dh);

    double worst = 0.0;
    for (int j = 0; j < 4; ++j) {
        worst = std::max(worst, std::abs(H(2 * j) - g.grad_f[j].real()));
        worst = std::max(worst, std::abs(H(2 * j + 1) - g.grad_f[j].imag()));
    }
    return worst;
}

QuinticFamilySpec perturbed_fermat(std::complex<double> psi, double epsilon, std::uint64_t seed) {
    QuinticFamilySpec spec;
    spec.psi = psi;
    for (int i = 0; i < 5; ++i) {
        std::array<int, 5> m{};
        m[i] = 5;
        spec.coefficients[m] = Cd{1.0, 0.0};
    }
    if (epsilon != 0.0) {
        Rng rng(seed);
        // All degree-5 exponent vectors in 5 variables, odometer order.
        std::array<int, 5> m{5, 0, 0, 0, 0};
        auto advance = [&]() -> bool {
            // Composition successor: move one unit from the rightmost movable
            // slot and collect everything to its right.
            for (int i = 3; i >= 0; --i) {
                if (m[i] > 0) {
                    int tail = 0;
                    for (int j = i + 1; j < 5; ++j) tail += m[j];
                    m[i] -= 1;
                    m[i + 1] = tail + 1;
                    for (int j = i + 2; j < 5; ++j) m[j] = 0;
                    return true;
                }
            }
            return false;
        };
        do {
            if (m == std::array<int, 5>{1, 1, 1, 1, 1}) continue;
            Cd bump{epsilon * (2.0 * rng.uniform() - 1.0), epsilon * (2.0 * rng.uniform() - 1.0)};
            spec.coefficients[m] += bump;
        } while (advance());
    }
    return spec;
}

C5 x_infinity_start(const QuinticFamilySpec& spec, std::uint64_t seed) {
    validate(spec);
    Rng rng(seed);
    constexpr double kTau = 6.283185307179586;
    for (int attempt = 0; attempt < 64; ++attempt) {
        int zero_at = int(rng.next() % 5);
        C5 z;
        for (int i = 0; i < 5; ++i) {
            if (i == zero_at) {
                z[i] = Cd{0.0, 0.0};
            } else {
                double r = 0.6 + 0.8 * rng.uniform();
                double th = kTau * rng.uniform();
                z[i] = std::polar(r, th);
            }
        }
        auto [pa, scale] = pa_with_scale(spec, z);
        if (std::abs(pa) < 1e-2 * scale) continue;  // too close to a pole of s
        Chart c = to_chart(z);
        Gradient g = gradient_f(spec, c);
        if (g.norm2 < 1e-6 * (1.0 + std::norm(g.s))) continue;  // too close to critical
        return sup_normalize(z);
    }
    throw NumericalFailure("could not sample a usable start point on {p_inf = 0}");
}

}  // namespace tfib
