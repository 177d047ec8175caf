#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ricci/metric.hpp"

namespace ricci {

/// A coordinate metric patch: g_ij evaluated at points of a box. Used only
/// by the independent finite-difference curvature oracle; validity bounds
/// keep the FD stencil honest.
struct MetricChart {
    int dim = 0;
    std::vector<double> lo;  // per-axis lower bounds
    std::vector<double> hi;  // per-axis upper bounds
    /// Writes the dim x dim metric components (row major) at x.
    std::function<void(std::span<const double>, double*)> eval;
};

struct FdCurvature {
    int dim = 0;
    std::vector<double> ricci;  // dim x dim, row major, coordinate components
    double s = 0.0;
};

/// Ricci and scalar curvature by nested central differences: Christoffel
/// symbols from d g, Riemann from d Gamma, Ricci by contraction. Error is
/// O(h_fd^2) against smooth closed forms. The touched stencil spans
/// +-2 h_fd per axis.
FdCurvature fd_curvature_oracle(const MetricChart& chart,
                                std::span<const double> point, double h_fd);

/// Coordinate chart for g = dt^2 + b(t)^2 g_Sigma with the space-form fiber
/// in conformal coordinates; x = (t, x_2..x_n), fiber origin at x_i = 0.
MetricChart warped_chart(const WarpedProductMetric& metric);

/// Coordinate chart for g = dt^2/f^2 + t^2 g_{S^2}; x = (t, y_1, y_2).
MetricChart conformal_radial_chart(const RadialScalarField& f);

}  // namespace ricci
