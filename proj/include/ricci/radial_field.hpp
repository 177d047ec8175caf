#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "ricci/errors.hpp"

namespace ricci {

/// A smooth function of the radial coordinate t on a closed interval,
/// carrying its first three derivatives. Backed either by closed-form
/// jet evaluators or by a quintic Hermite spline built from sampled
/// (value, d1, d2) nodes (e.g. along an integrated trajectory).
///
/// Evaluation outside [lo, hi] raises DomainError; the field never
/// extrapolates.
class RadialScalarField {
public:
    struct Jet {
        double value = 0.0;
        double d1 = 0.0;
        double d2 = 0.0;
        double d3 = 0.0;
    };
    using JetFn = std::function<Jet(double)>;

    RadialScalarField() = default;

    /// Closed-form field from a jet evaluator.
    static RadialScalarField from_jets(double lo, double hi, JetFn fn);

    /// Quintic Hermite spline through (t_i, value_i, d1_i, d2_i) nodes.
    /// Nodes must be strictly increasing and at least two.
    static RadialScalarField from_samples(std::vector<double> ts,
                                          std::vector<double> values,
                                          std::vector<double> d1s,
                                          std::vector<double> d2s);

    static RadialScalarField constant(double c, double lo, double hi);
    /// a0 + a1 * t
    static RadialScalarField linear(double a0, double a1, double lo, double hi);
    /// amp * sin(omega t + phase)
    static RadialScalarField sinusoid(double amp, double omega, double phase,
                                      double lo, double hi);
    /// amp * sinh(omega t)
    static RadialScalarField sinh_profile(double amp, double omega, double lo,
                                          double hi);
    /// amp * cosh(omega t)
    static RadialScalarField cosh_profile(double amp, double omega, double lo,
                                          double hi);
    /// sqrt(1 - 2m/t), needs lo > 2m
    static RadialScalarField schwarzschild_exterior_lapse(double m, double lo,
                                                          double hi);
    /// sqrt(1 - 2 m t^2 / R3), needs hi < sqrt(R3/(2m))
    static RadialScalarField schwarzschild_interior_lapse(double m, double R3,
                                                          double lo, double hi);

    Jet eval(double t) const;
    double value(double t) const { return eval(t).value; }
    double d1(double t) const { return eval(t).d1; }
    double d2(double t) const { return eval(t).d2; }

    double lo() const;
    double hi() const;
    bool spline_backed() const;

    /// factor * field, same domain.
    RadialScalarField scaled(double factor) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit RadialScalarField(std::shared_ptr<const Impl> impl)
        : impl_(std::move(impl)) {}
};

}  // namespace ricci
