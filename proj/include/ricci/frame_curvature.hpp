#pragma once

#include "ricci/metric.hpp"
#include "ricci/radial_field.hpp"

namespace ricci {

/// Orthonormal-frame curvature data at one radial point. Frame ordering is
/// fixed: e1 is the unit radial vector, e2..en are tangential; by symmetry
/// all tangential diagonal components agree and every off-diagonal frame
/// Ricci component vanishes in both ansatze.
struct FramePointCurvature {
    double t = 0.0;
    int n = 3;
    double R_rad = 0.0;   // Ric(e1, e1), the radial eigenvalue alpha
    double R_tan = 0.0;   // any tangential diagonal Ricci component
    double s = 0.0;       // scalar curvature
    double sec_rad = 0.0; // sectional curvature of a (e1, ei) plane
    double sec_tan = 0.0; // sectional curvature of a (ei, ej) plane, i,j >= 2

    double alpha() const { return R_rad; }
};

/// Frame Hessian diagonals and Laplacian of a radial function.
struct HessianLaplacian {
    double rad = 0.0;  // Ddw(e1, e1)
    double tan = 0.0;  // Ddw(ei, ei), i >= 2
    double lap = 0.0;
};

/// Everything the identity suites need at one point of a radial ansatz:
/// curvature, the shape coefficient of the level spheres, the unit-radial
/// derivative operator N, and t-derivatives of the curvature scalars.
/// For Warped N = d/dt; for ConformalRadial N = f d/dt.
struct RadialFrame {
    int n = 3;
    Ansatz ansatz = Ansatz::Warped;
    double t = 0.0;
    FramePointCurvature curv;
    double conn = 0.0;    // <D_{e_i} e1, e_i> = rho'/rho of the warp
    double sigma = 1.0;   // N = sigma d/dt
    double sigma1 = 0.0;  // d sigma / dt
    double alpha1_t = 0.0;  // d alpha / dt
    double beta1_t = 0.0;   // d R_tan / dt
    double s1_t = 0.0;      // d s / dt
    double s2_t = 0.0;      // d^2 s / dt^2

    double N_of(double d1) const { return sigma * d1; }
    double NN_of(double d1, double d2) const {
        return sigma * (sigma * d2 + sigma1 * d1);
    }
};

/// Ricci data of g = dt^2 + b^2 g_Sigma at interior t.
FramePointCurvature ricci_warped(const WarpedProductMetric& metric, double t);

/// Ricci data of g = dt^2/f^2 + t^2 g_{S^2} at interior t > 0.
FramePointCurvature ricci_conformal_radial(const RadialScalarField& f,
                                           double t);

/// Dispatch on the metric's ansatz.
FramePointCurvature curvature_at(const WarpedProductMetric& metric, double t);

/// Frame Hessian diagonals and Laplacian of the radial function w in the
/// given ansatz.
HessianLaplacian hessian_laplacian_radial(const WarpedProductMetric& metric,
                                          const RadialScalarField& w,
                                          double t);

/// Full per-point frame data including curvature derivatives along t.
RadialFrame radial_frame(const WarpedProductMetric& metric, double t);

}  // namespace ricci
