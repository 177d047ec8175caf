#pragma once

#include "ricci/errors.hpp"
#include "ricci/radial_field.hpp"

namespace ricci {

/// The two radial metric ansatze supported by the lab.
enum class Ansatz {
    /// g = dt^2 + b(t)^2 g_Sigma over a space form with Ric = (n-2) kappa0 g.
    Warped,
    /// g = dt^2/f(t)^2 + t^2 g_{S^2}, three-dimensional only.
    ConformalRadial,
};

/// Radially symmetric metric ansatz. For Warped the profile is the warping
/// function b; for ConformalRadial it is the lapse f (the fiber is the unit
/// round 2-sphere and n = 3).
struct WarpedProductMetric {
    Ansatz ansatz = Ansatz::Warped;
    int n = 3;
    RadialScalarField profile;
    double kappa0 = 1.0;
    double b_min_guard = 1e-8;

    static WarpedProductMetric warped(int n, RadialScalarField b,
                                      double kappa0) {
        if (n < 3) throw DimensionError("warped ansatz needs n >= 3");
        WarpedProductMetric m;
        m.ansatz = Ansatz::Warped;
        m.n = n;
        m.profile = std::move(b);
        m.kappa0 = kappa0;
        return m;
    }

    static WarpedProductMetric conformal_radial(RadialScalarField f) {
        WarpedProductMetric m;
        m.ansatz = Ansatz::ConformalRadial;
        m.n = 3;
        m.profile = std::move(f);
        m.kappa0 = 1.0;
        return m;
    }

    const RadialScalarField& b() const { return profile; }
    double domain_lo() const { return profile.lo(); }
    double domain_hi() const { return profile.hi(); }
};

}  // namespace ricci
