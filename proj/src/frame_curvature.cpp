#include "ricci/frame_curvature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ricci {

namespace {

void check_warp_guard(double b, double guard, double t) {
    if (!(b > guard)) {
        std::ostringstream os;
        os << "warping " << b << " at t=" << t << " below guard " << guard;
        throw SingularWarp(os.str());
    }
}

FramePointCurvature warped_curvature(int n, double kappa0,
                                     const RadialScalarField::Jet& b,
                                     double t) {
    FramePointCurvature c;
    c.t = t;
    c.n = n;
    c.R_rad = -(n - 1) * b.d2 / b.value;
    c.R_tan = (-b.value * b.d2 - (n - 2) * b.d1 * b.d1 + (n - 2) * kappa0) /
              (b.value * b.value);
    c.s = c.R_rad + (n - 1) * c.R_tan;
    c.sec_rad = -b.d2 / b.value;
    c.sec_tan = (kappa0 - b.d1 * b.d1) / (b.value * b.value);
    return c;
}

FramePointCurvature conformal_curvature(const RadialScalarField::Jet& f,
                                        double t) {
    const double u = f.d1 * f.value;  // f' f
    FramePointCurvature c;
    c.t = t;
    c.n = 3;
    c.R_rad = -2.0 * u / t;
    c.R_tan = -(t * u + f.value * f.value - 1.0) / (t * t);
    c.s = c.R_rad + 2.0 * c.R_tan;
    c.sec_rad = -u / t;
    c.sec_tan = (1.0 - f.value * f.value) / (t * t);
    return c;
}

// d s / dt of the warped ansatz, from jets up to b'''.
double warped_s1(int n, double kappa0, const RadialScalarField::Jet& b) {
    const double v = b.value;
    return -2.0 * (n - 1) * (b.d3 / v - b.d2 * b.d1 / (v * v)) -
           2.0 * (n - 1) * (n - 2) * b.d1 *
               (b.d2 - (b.d1 * b.d1 - kappa0) / v) / (v * v);
}

}  // namespace

FramePointCurvature ricci_warped(const WarpedProductMetric& metric, double t) {
    if (metric.ansatz != Ansatz::Warped)
        throw DomainError("ricci_warped called on non-warped ansatz");
    const auto b = metric.profile.eval(t);
    check_warp_guard(b.value, metric.b_min_guard, t);
    return warped_curvature(metric.n, metric.kappa0, b, t);
}

FramePointCurvature ricci_conformal_radial(const RadialScalarField& f,
                                           double t) {
    if (!(t > 0.0))
        throw DomainError("conformal radial ansatz needs t > 0");
    const auto j = f.eval(t);
    if (!(j.value > 0.0)) {
        std::ostringstream os;
        os << "lapse f(t)=" << j.value << " <= 0 at t=" << t;
        throw NonpositiveLapse(os.str());
    }
    return conformal_curvature(j, t);
}

FramePointCurvature curvature_at(const WarpedProductMetric& metric, double t) {
    if (metric.ansatz == Ansatz::Warped) return ricci_warped(metric, t);
    check_warp_guard(t, metric.b_min_guard, t);  // areal radius is the warp
    return ricci_conformal_radial(metric.profile, t);
}

HessianLaplacian hessian_laplacian_radial(const WarpedProductMetric& metric,
                                          const RadialScalarField& w,
                                          double t) {
    const auto wj = w.eval(t);
    HessianLaplacian out;
    if (metric.ansatz == Ansatz::Warped) {
        const auto b = metric.profile.eval(t);
        check_warp_guard(b.value, metric.b_min_guard, t);
        out.rad = wj.d2;
        out.tan = (b.d1 / b.value) * wj.d1;
        out.lap = out.rad + (metric.n - 1) * out.tan;
    } else {
        if (!(t > 0.0)) throw DomainError("conformal radial needs t > 0");
        const auto f = metric.profile.eval(t);
        if (!(f.value > 0.0)) throw NonpositiveLapse("lapse <= 0");
        const double f2 = f.value * f.value;
        out.rad = f2 * wj.d2 + f.value * f.d1 * wj.d1;
        out.tan = f2 * wj.d1 / t;
        out.lap = out.rad + 2.0 * out.tan;
    }
    return out;
}

RadialFrame radial_frame(const WarpedProductMetric& metric, double t) {
    RadialFrame fr;
    fr.n = metric.n;
    fr.ansatz = metric.ansatz;
    fr.t = t;
    if (metric.ansatz == Ansatz::Warped) {
        const auto b = metric.profile.eval(t);
        check_warp_guard(b.value, metric.b_min_guard, t);
        const int n = metric.n;
        const double k0 = metric.kappa0;
        fr.curv = warped_curvature(n, k0, b, t);
        fr.conn = b.d1 / b.value;
        fr.sigma = 1.0;
        fr.sigma1 = 0.0;
        const double v = b.value;
        fr.alpha1_t = -(n - 1) * (b.d3 / v - b.d2 * b.d1 / (v * v));
        fr.beta1_t =
            (-b.d1 * b.d2 - v * b.d3 - 2.0 * (n - 2) * b.d1 * b.d2) / (v * v) -
            2.0 * b.d1 * (-v * b.d2 - (n - 2) * (b.d1 * b.d1 - k0)) /
                (v * v * v);
        fr.s1_t = warped_s1(n, k0, b);
        // s'' needs b'''' which the jets do not carry; differentiate the
        // analytic s' with a five-point central stencil instead.
        const double lo = metric.profile.lo();
        const double hi = metric.profile.hi();
        const double dist = std::min(t - lo, hi - t);
        double e = std::min(0.01 * std::max(1.0, std::abs(t)), dist / 2.5);
        if (e > 0.0) {
            auto s1_at = [&](double x) {
                return warped_s1(n, k0, metric.profile.eval(x));
            };
            fr.s2_t = (-s1_at(t + 2 * e) + 8.0 * s1_at(t + e) -
                       8.0 * s1_at(t - e) + s1_at(t - 2 * e)) /
                      (12.0 * e);
        } else {
            fr.s2_t = 0.0;  // boundary point; callers use interior grids
        }
    } else {
        if (!(t > 0.0)) throw DomainError("conformal radial needs t > 0");
        check_warp_guard(t, metric.b_min_guard, t);
        const auto f = metric.profile.eval(t);
        if (!(f.value > 0.0)) throw NonpositiveLapse("lapse <= 0");
        fr.curv = conformal_curvature(f, t);
        fr.conn = f.value / t;
        fr.sigma = f.value;
        fr.sigma1 = f.d1;
        const double u = f.d1 * f.value;
        const double u1 = f.d2 * f.value + f.d1 * f.d1;
        const double u2 = f.d3 * f.value + 3.0 * f.d1 * f.d2;
        const double ff = f.value * f.value;
        fr.alpha1_t = -2.0 * u1 / t + 2.0 * u / (t * t);
        fr.beta1_t = -(3.0 * u + t * u1) / (t * t) +
                     2.0 * (t * u + ff - 1.0) / (t * t * t);
        fr.s1_t = -4.0 * u1 / t + 4.0 * (ff - 1.0) / (t * t * t);
        fr.s2_t = -4.0 * u2 / t + 4.0 * u1 / (t * t) + 8.0 * u / (t * t * t) -
                  12.0 * (ff - 1.0) / (t * t * t * t);
    }
    return fr;
}

}  // namespace ricci
