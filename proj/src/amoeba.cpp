#include "torusfib/amoeba.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>

#include "torusfib/errors.hpp"
#include "torusfib/rng.hpp"

namespace tfib {

namespace {

using Cplx = std::complex<double>;

struct Monomial {
    long long m1 = 0, m2 = 0;
    double coeff = 0.0;
};

double rat_to_double(const Rat& r) {
    return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

// Expand the curve specification into concrete monomials sign * t^{w(m)}.
std::vector<Monomial> expand(const CurveSpec& spec) {
    if (spec.degree < 1) throw std::invalid_argument("sample_amoeba: degree must be >= 1");
    if (!(spec.t > 0.0 && spec.t < 1.0))
        throw std::invalid_argument("sample_amoeba: t must lie in (0,1)");
    LatticePolytope tri = newton_polygon(spec.degree);
    IMat pts = tri.integral_points();
    std::map<IVec, Rat> heights;
    for (const auto& [key, val] : spec.weights.values) heights[key] = val;
    if (heights.size() != pts.size())
        throw DomainMismatch("weights must cover exactly the lattice points of the d-triangle");
    std::vector<Monomial> out;
    const double logt = std::log(spec.t);
    for (const IVec& p : pts) {
        auto it = heights.find(p);
        if (it == heights.end())
            throw DomainMismatch("missing weight for a lattice point of the d-triangle");
        long long m1 = static_cast<long long>(p[0]), m2 = static_cast<long long>(p[1]);
        int sign;
        if (auto s = spec.signs.find(p); s != spec.signs.end())
            sign = s->second;
        else
            sign = ((m1 + m2) % 2 == 0) ? 1 : -1;
        if (sign == 0) continue;
        Monomial mono;
        mono.m1 = m1;
        mono.m2 = m2;
        mono.coeff = static_cast<double>(sign) * std::exp(rat_to_double(it->second) * logt);
        out.push_back(mono);
    }
    return out;
}

Cplx evaluate(const std::vector<Monomial>& monos, Cplx z1, Cplx z2, double* magnitude) {
    Cplx total(0.0, 0.0);
    double mag = 0.0;
    for (const Monomial& m : monos) {
        Cplx term = m.coeff * std::pow(z1, static_cast<double>(m.m1)) *
                    std::pow(z2, static_cast<double>(m.m2));
        total += term;
        mag += std::abs(term);
    }
    if (magnitude) *magnitude = mag;
    return total;
}

// Roots of sum c_k x^k by companion-matrix eigenvalues.
std::vector<Cplx> poly_roots(std::vector<Cplx> c) {
    while (!c.empty() && std::abs(c.back()) < 1e-250) c.pop_back();
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg < 1) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("companion-matrix eigenvalue solve did not converge");
    std::vector<Cplx> roots;
    for (int i = 0; i < deg; ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

double point_segment_distance(double px, double py, const std::array<double, 4>& seg) {
    double dx = seg[2] - seg[0], dy = seg[3] - seg[1];
    double len2 = dx * dx + dy * dy;
    double s = 0.0;
    if (len2 > 0.0)
        s = std::clamp(((px - seg[0]) * dx + (py - seg[1]) * dy) / len2, 0.0, 1.0);
    double qx = seg[0] + s * dx - px, qy = seg[1] + s * dy - py;
    return std::hypot(qx, qy);
}

// Liang-Barsky clipping of the parametric segment a + s(b-a), s in [0, smax]
// (smax may be huge for rays), to the window.  Returns false if no part of
// the segment is inside.
bool clip_to_window(double ax, double ay, double bx, double by, double smax, const Window& w,
                    std::array<double, 4>& out) {
    double dx = bx - ax, dy = by - ay;
    double s0 = 0.0, s1 = smax;
    auto update = [&](double p, double q) {
        if (p == 0.0) return q >= 0.0;
        double r = q / p;
        if (p < 0.0) {
            if (r > s1) return false;
            if (r > s0) s0 = r;
        } else {
            if (r < s0) return false;
            if (r < s1) s1 = r;
        }
        return true;
    };
    if (!update(-dx, ax - w.xmin)) return false;
    if (!update(dx, w.xmax - ax)) return false;
    if (!update(-dy, ay - w.ymin)) return false;
    if (!update(dy, w.ymax - ay)) return false;
    out = {ax + s0 * dx, ay + s0 * dy, ax + s1 * dx, ay + s1 * dy};
    return true;
}

std::vector<std::array<double, 4>> clipped_segments(const SpineGraph& G, const Window& w) {
    std::map<int, std::array<double, 2>> pos;
    for (const SpineVertex& v : G.vertices)
        pos[v.id] = {rat_to_double(v.pos[0]), rat_to_double(v.pos[1])};
    std::vector<std::array<double, 4>> segs;
    std::array<double, 4> clipped;
    for (const SpineEdge& e : G.edges) {
        const auto& a = pos.at(e.u);
        const auto& b = pos.at(e.v);
        if (clip_to_window(a[0], a[1], b[0], b[1], 1.0, w, clipped)) segs.push_back(clipped);
    }
    for (const SpineLeg& l : G.legs) {
        const auto& a = pos.at(l.v);
        double dx = static_cast<double>(l.dir[0]), dy = static_cast<double>(l.dir[1]);
        if (clip_to_window(a[0], a[1], a[0] + dx, a[1] + dy, 1e9, w, clipped))
            segs.push_back(clipped);
    }
    // Isolated vertices still contribute (degenerate segments).
    std::map<int, bool> touched;
    for (const SpineEdge& e : G.edges) touched[e.u] = touched[e.v] = true;
    for (const SpineLeg& l : G.legs) touched[l.v] = true;
    for (const SpineVertex& v : G.vertices) {
        if (touched.count(v.id)) continue;
        const auto& a = pos.at(v.id);
        if (w.contains(a[0], a[1])) segs.push_back({a[0], a[1], a[0], a[1]});
    }
    return segs;
}

}  // namespace

PointCloud sample_amoeba(const CurveSpec& spec, int n, std::uint64_t seed, const Window& window) {
    if (n < 1) throw std::invalid_argument("sample_amoeba: need n >= 1");
    std::vector<Monomial> monos = expand(spec);

    Rng rng(seed);
    const double logt = std::log(spec.t);
    const double pad = 0.2;
    PointCloud cloud;
    cloud.window = window;

    const long long base_slices = 2LL * n;
    const long long max_slices = 200LL * n + 1000;
    long long slice = 0;
    while (slice < max_slices) {
        if (slice >= base_slices && static_cast<int>(cloud.points.size()) >= n) break;
        const bool fix_first = (slice % 2 == 0);
        ++slice;
        // The fixed coordinate: |z| = t^{u_fix}, random phase.
        double lo = fix_first ? window.xmin : window.ymin;
        double hi = fix_first ? window.xmax : window.ymax;
        double u_fix = rng.uniform(lo - pad, hi + pad);
        double phase = rng.uniform(0.0, 2.0 * M_PI);
        Cplx fixed = std::polar(std::exp(u_fix * logt), phase);

        // Restrict to a univariate polynomial in the other coordinate.
        long long maxdeg = 0;
        for (const Monomial& m : monos) maxdeg = std::max(maxdeg, fix_first ? m.m2 : m.m1);
        std::vector<Cplx> coeffs(static_cast<size_t>(maxdeg) + 1, Cplx(0.0, 0.0));
        for (const Monomial& m : monos) {
            long long fixed_exp = fix_first ? m.m1 : m.m2;
            long long free_exp = fix_first ? m.m2 : m.m1;
            coeffs[static_cast<size_t>(free_exp)] +=
                m.coeff * std::pow(fixed, static_cast<double>(fixed_exp));
        }
        for (Cplx root : poly_roots(std::move(coeffs))) {
            Cplx z1 = fix_first ? fixed : root;
            Cplx z2 = fix_first ? root : fixed;
            double mag = 0.0;
            Cplx residual = evaluate(monos, z1, z2, &mag);
            if (!(std::abs(residual) <= 1e-10 * std::max(mag, 1e-300))) continue;
            double a1 = std::abs(z1), a2 = std::abs(z2);
            if (a1 <= 0.0 || a2 <= 0.0) continue;
            double u1 = std::log(a1) / logt, u2 = std::log(a2) / logt;
            if (std::isfinite(u1) && std::isfinite(u2) && window.contains(u1, u2))
                cloud.points.push_back({u1, u2});
        }
    }
    if (cloud.points.empty())
        throw NoRootsFound("no amoeba points found inside the window for this curve");
    if (static_cast<int>(cloud.points.size()) < n)
        throw NumericalFailure("found only " + std::to_string(cloud.points.size()) + " of " +
                               std::to_string(n) + " requested amoeba points");
    return cloud;
}

std::array<double, 2> moment_map(const std::array<std::complex<double>, 3>& z, int d) {
    double n0 = std::norm(z[0]), n1 = std::norm(z[1]), n2 = std::norm(z[2]);
    double total = n0 + n1 + n2;
    if (total <= 0.0) throw std::invalid_argument("moment_map: zero vector is not projective");
    return {d * n1 / total, d * n2 / total};
}

double hausdorff_distance(const PointCloud& cloud, const SpineGraph& G, const Window& window) {
    if (cloud.points.empty()) throw EmptyInput("hausdorff_distance: empty point cloud");
    std::vector<std::array<double, 4>> segs = clipped_segments(G, window);
    if (segs.empty()) throw EmptyInput("hausdorff_distance: graph does not meet the window");

    double cloud_to_graph = 0.0;
    for (const auto& p : cloud.points) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& s : segs) best = std::min(best, point_segment_distance(p[0], p[1], s));
        cloud_to_graph = std::max(cloud_to_graph, best);
    }

    double graph_to_cloud = 0.0;
    const double step = 0.02;
    for (const auto& s : segs) {
        double len = std::hypot(s[2] - s[0], s[3] - s[1]);
        int samples = std::max(1, static_cast<int>(std::ceil(len / step)));
        for (int i = 0; i <= samples; ++i) {
            double f = static_cast<double>(i) / samples;
            double x = s[0] + f * (s[2] - s[0]), y = s[1] + f * (s[3] - s[1]);
            double best = std::numeric_limits<double>::infinity();
            for (const auto& p : cloud.points)
                best = std::min(best, std::hypot(p[0] - x, p[1] - y));
            graph_to_cloud = std::max(graph_to_cloud, best);
        }
    }
    return std::max(cloud_to_graph, graph_to_cloud);
}

ConvergenceReport verify_fattening(const CurveSpec& base, const std::vector<double>& ts,
                                   const SpineGraph& G, int n, std::uint64_t seed, double margin,
                                   const Window& window) {
    if (ts.empty()) throw EmptyInput("verify_fattening: need at least one t value");
    ConvergenceReport report;
    for (double t : ts) {
        CurveSpec spec = base;
        spec.t = t;
        PointCloud cloud = sample_amoeba(spec, n, seed, window);
        report.rows.push_back({t, hausdorff_distance(cloud, G, window)});
    }
    if (report.rows.size() >= 2) {
        report.has_verdict = true;
        report.monotone = true;
        for (size_t i = 0; i + 1 < report.rows.size(); ++i)
            if (report.rows[i + 1].distance > report.rows[i].distance + margin)
                report.monotone = false;
    }
    return report;
}

}  // namespace tfib
