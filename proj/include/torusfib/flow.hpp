#pragma once

// Gradient flow of f = Re(s), s = p_inf/p_a, on the quintic family
// p_psi = p_a + psi * prod(z), in the Fubini-Study metric on CP^4.  The
// field V = grad(f)/|grad f|^2 makes flow time equal f-displacement, so
// integrating from the hypersurface {s = 0} to f = -1/psi lands on the
// family member X_psi.  Also: pointwise numerical verification that grad(f)
// equals the Hamiltonian field of h = Im(s).

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace tfib {

using C5 = std::array<std::complex<double>, 5>;

// Degree-5 coefficients a_m, m != (1,1,1,1,1); that slot is reserved for the
// family parameter psi.
struct QuinticFamilySpec {
    std::map<std::array<int, 5>, std::complex<double>> coefficients;
    std::complex<double> psi{0.0, 0.0};
};

// p_a, p_inf = prod(z), and the family member p_psi = p_a + psi*p_inf.
std::complex<double> evaluate_pa(const QuinticFamilySpec& spec, const C5& z);
std::complex<double> evaluate_pinf(const C5& z);
std::complex<double> evaluate_ppsi(const QuinticFamilySpec& spec, const C5& z);

// s = p_inf / p_a.  Throws PoleOfS when p_a vanishes (relative to the
// monomial magnitude at z).
std::complex<double> evaluate_s(const QuinticFamilySpec& spec, const C5& z);

struct FlowSample {
    double time = 0.0;
    C5 z{};                        // sup-normalized projective representative
    std::complex<double> s{0.0};
};

struct FlowTrajectory {
    std::vector<FlowSample> samples;
    int steps_accepted = 0;
    int steps_rejected = 0;
    int chart_switches = 0;
    double max_im_s = 0.0;  // largest |Im s| seen at accepted samples
};

struct FlowOptions {
    double h_max = 0.05;            // largest time step (= f-step)
    int max_steps = 100000;
    double critical_threshold = 1e-14;  // |grad f|^2 cutoff, scaled
};

// Integrates dz/dt = grad(f)/|grad f|^2 (direction chosen toward the target)
// until f reaches target_f within tol.  Step rejection is keyed to Im(s)
// drift, the invariant the flow must preserve.
FlowTrajectory flow_point(const QuinticFamilySpec& spec, const C5& z0, double target_f,
                          double tol, const FlowOptions& opts = FlowOptions{});

// Max componentwise residual between the analytic metric gradient of f and
// the Hamiltonian field of h recovered from central finite differences of
// step fd_step.  Second-order small for regular points.
double check_hamiltonian_equality(const QuinticFamilySpec& spec, const C5& z, double fd_step);

// Fermat quintic plus a uniform complex perturbation of size epsilon on
// every other degree-5 monomial; deterministic in the seed.
QuinticFamilySpec perturbed_fermat(std::complex<double> psi, double epsilon, std::uint64_t seed);

// A pseudo-random smooth point of {p_inf = 0} (one coordinate zero) suitable
// as a flow start: away from poles of s and from the critical set.
C5 x_infinity_start(const QuinticFamilySpec& spec, std::uint64_t seed);

}  // namespace tfib
