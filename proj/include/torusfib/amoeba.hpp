#pragma once

// Numerical amoeba sampling for plane curves with coefficients t^w: slice
// the curve along random radial lines, solve the restricted univariate
// polynomial, and map roots to rescaled log coordinates.  Convergence to the
// tropical spine is quantified by a symmetric Hausdorff distance.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "torusfib/spine.hpp"
#include "torusfib/subdivision.hpp"

namespace tfib {

// A plane curve of degree d in homogeneous coordinates [z0:z1:z2], with
// coefficient magnitudes t^{w(m)} over the lattice points of the d-triangle.
// Signs default to (-1)^(m1+m2), which keeps the real slice nonempty; an
// explicit sign of 0 drops a monomial.
struct CurveSpec {
    int degree = 1;
    WeightFunction weights;
    double t = 0.1;
    std::map<IVec, int> signs;
};

struct Window {
    double xmin = -3.0, xmax = 3.0;
    double ymin = -3.0, ymax = 3.0;
    bool contains(double x, double y) const {
        return x >= xmin && x <= xmax && y >= ymin && y <= ymax;
    }
};

struct PointCloud {
    std::vector<std::array<double, 2>> points;
    Window window;
};

// Samples at least n amoeba points in rescaled log coordinates
// u = (log|z1/z0|, log|z2/z0|) / log t, deterministically for a given seed.
PointCloud sample_amoeba(const CurveSpec& spec, int n, std::uint64_t seed = 1,
                         const Window& window = Window{});

// Moment map of CP^2 scaled to the dilated simplex d*conv{0,e1,e2}:
// z -> d*(|z1|^2,|z2|^2)/(|z0|^2+|z1|^2+|z2|^2).
std::array<double, 2> moment_map(const std::array<std::complex<double>, 3>& z, int d);

// Symmetric Hausdorff distance between the cloud and the spine graph
// clipped to the window (point-to-segment distances; legs are rays).
double hausdorff_distance(const PointCloud& cloud, const SpineGraph& G,
                          const Window& window = Window{});

struct ConvergenceRow {
    double t = 0.0;
    double distance = 0.0;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    bool has_verdict = false;  // requires at least two t values
    bool monotone = false;     // distances decrease along the given t order
};

// Runs sample_amoeba over a grid of t values against a fixed spine and
// reports whether the distances decrease (within the noise margin).
ConvergenceReport verify_fattening(const CurveSpec& base, const std::vector<double>& ts,
                                   const SpineGraph& G, int n, std::uint64_t seed = 1,
                                   double margin = 0.02, const Window& window = Window{});

}  // namespace tfib
