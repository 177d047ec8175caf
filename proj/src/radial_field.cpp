#include "ricci/radial_field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace ricci {

namespace {

// Quintic Hermite basis on tau in [0,1]; matches (v, d1, d2) at both ends.
struct QuinticCoeffs {
    double c[6];  // polynomial coefficients in tau
};

QuinticCoeffs quintic_from_nodes(double v0, double m0, double a0, double v1,
                                 double m1, double a1, double dt) {
    // p(tau) = v0 H0 + m0 dt H1 + a0 dt^2 H2 + v1 H3 + m1 dt H4 + a1 dt^2 H5
    const double M0 = m0 * dt;
    const double A0 = a0 * dt * dt;
    const double M1 = m1 * dt;
    const double A1 = a1 * dt * dt;
    QuinticCoeffs q{};
    q.c[0] = v0;
    q.c[1] = M0;
    q.c[2] = 0.5 * A0;
    q.c[3] = -10.0 * v0 - 6.0 * M0 - 1.5 * A0 + 10.0 * v1 - 4.0 * M1 + 0.5 * A1;
    q.c[4] = 15.0 * v0 + 8.0 * M0 + 1.5 * A0 - 15.0 * v1 + 7.0 * M1 - A1;
    q.c[5] = -6.0 * v0 - 3.0 * M0 - 0.5 * A0 + 6.0 * v1 - 3.0 * M1 + 0.5 * A1;
    return q;
}

}  // namespace

struct RadialScalarField::Impl {
    double lo = 0.0;
    double hi = 0.0;
    bool is_spline = false;

    JetFn fn;  // closed form

    // spline data
    std::vector<double> ts;
    std::vector<QuinticCoeffs> segs;

    Jet eval(double t) const {
        if (!(t >= lo && t <= hi)) {
            std::ostringstream os;
            os << "radial field queried at t=" << t << " outside [" << lo
               << ", " << hi << "]";
            throw DomainError(os.str());
        }
        if (!is_spline) return fn(t);

        // locate segment: largest i with ts[i] <= t (last segment for t == hi)
        auto it = std::upper_bound(ts.begin(), ts.end(), t);
        size_t i = static_cast<size_t>(it - ts.begin());
        if (i > 0) --i;
        if (i >= segs.size()) i = segs.size() - 1;
        const double dt = ts[i + 1] - ts[i];
        const double tau = (t - ts[i]) / dt;
        const auto& c = segs[i].c;
        double p = 0.0, p1 = 0.0, p2 = 0.0, p3 = 0.0;
        for (int k = 5; k >= 0; --k) p = p * tau + c[k];
        for (int k = 5; k >= 1; --k) p1 = p1 * tau + k * c[k];
        for (int k = 5; k >= 2; --k) p2 = p2 * tau + k * (k - 1) * c[k];
        for (int k = 5; k >= 3; --k) p3 = p3 * tau + k * (k - 1) * (k - 2) * c[k];
        Jet j;
        j.value = p;
        j.d1 = p1 / dt;
        j.d2 = p2 / (dt * dt);
        j.d3 = p3 / (dt * dt * dt);
        return j;
    }
};

RadialScalarField RadialScalarField::from_jets(double lo, double hi, JetFn fn) {
    if (!(lo < hi)) throw DomainError("radial field needs lo < hi");
    auto impl = std::make_shared<Impl>();
    impl->lo = lo;
    impl->hi = hi;
    impl->fn = std::move(fn);
    return RadialScalarField(std::move(impl));
}

RadialScalarField RadialScalarField::from_samples(std::vector<double> ts,
                                                  std::vector<double> values,
                                                  std::vector<double> d1s,
                                                  std::vector<double> d2s) {
    const size_t m = ts.size();
    if (m < 2 || values.size() != m || d1s.size() != m || d2s.size() != m)
        throw DomainError("spline field needs >= 2 consistent nodes");
    for (size_t i = 0; i + 1 < m; ++i)
        if (!(ts[i] < ts[i + 1]))
            throw DomainError("spline nodes must be strictly increasing");
    auto impl = std::make_shared<Impl>();
    impl->lo = ts.front();
    impl->hi = ts.back();
    impl->is_spline = true;
    impl->segs.reserve(m - 1);
    for (size_t i = 0; i + 1 < m; ++i)
        impl->segs.push_back(quintic_from_nodes(values[i], d1s[i], d2s[i],
                                                values[i + 1], d1s[i + 1],
                                                d2s[i + 1], ts[i + 1] - ts[i]));
    impl->ts = std::move(ts);
    return RadialScalarField(std::move(impl));
}

RadialScalarField RadialScalarField::constant(double c, double lo, double hi) {
    return from_jets(lo, hi, [c](double) { return Jet{c, 0.0, 0.0, 0.0}; });
}

RadialScalarField RadialScalarField::linear(double a0, double a1, double lo,
                                            double hi) {
    return from_jets(
        lo, hi, [a0, a1](double t) { return Jet{a0 + a1 * t, a1, 0.0, 0.0}; });
}

RadialScalarField RadialScalarField::sinusoid(double amp, double omega,
                                              double phase, double lo,
                                              double hi) {
    return from_jets(lo, hi, [amp, omega, phase](double t) {
        const double s = std::sin(omega * t + phase);
        const double c = std::cos(omega * t + phase);
        return Jet{amp * s, amp * omega * c, -amp * omega * omega * s,
                   -amp * omega * omega * omega * c};
    });
}

RadialScalarField RadialScalarField::sinh_profile(double amp, double omega,
                                                  double lo, double hi) {
    return from_jets(lo, hi, [amp, omega](double t) {
        const double s = std::sinh(omega * t);
        const double c = std::cosh(omega * t);
        return Jet{amp * s, amp * omega * c, amp * omega * omega * s,
                   amp * omega * omega * omega * c};
    });
}

RadialScalarField RadialScalarField::cosh_profile(double amp, double omega,
                                                  double lo, double hi) {
    return from_jets(lo, hi, [amp, omega](double t) {
        const double c = std::cosh(omega * t);
        const double s = std::sinh(omega * t);
        return Jet{amp * c, amp * omega * s, amp * omega * omega * c,
                   amp * omega * omega * omega * s};
    });
}

RadialScalarField RadialScalarField::schwarzschild_exterior_lapse(double m,
                                                                  double lo,
                                                                  double hi) {
    if (!(lo > 2.0 * m))
        throw DomainError("exterior lapse needs lo > 2m (horizon)");
    return from_jets(lo, hi, [m](double t) {
        const double f = std::sqrt(1.0 - 2.0 * m / t);
        const double u = 1.0 - 2.0 * m / t;   // f^2
        const double u1 = 2.0 * m / (t * t);  // u'
        const double u2 = -4.0 * m / (t * t * t);
        const double u3 = 12.0 * m / (t * t * t * t);
        // f = sqrt(u): chain rule for three derivatives
        const double f1 = 0.5 * u1 / f;
        const double f2 = 0.5 * u2 / f - 0.25 * u1 * u1 / (u * f);
        const double f3 = 0.5 * u3 / f - 0.75 * u1 * u2 / (u * f) +
                          0.375 * u1 * u1 * u1 / (u * u * f);
        return Jet{f, f1, f2, f3};
    });
}

RadialScalarField RadialScalarField::schwarzschild_interior_lapse(double m,
                                                                  double R3,
                                                                  double lo,
                                                                  double hi) {
    if (!(hi < std::sqrt(R3 / (2.0 * m))))
        throw DomainError("interior lapse needs hi < sqrt(R3/2m)");
    return from_jets(lo, hi, [m, R3](double t) {
        const double u = 1.0 - 2.0 * m * t * t / R3;
        const double f = std::sqrt(u);
        const double u1 = -4.0 * m * t / R3;
        const double u2 = -4.0 * m / R3;
        const double f1 = 0.5 * u1 / f;
        const double f2 = 0.5 * u2 / f - 0.25 * u1 * u1 / (u * f);
        const double f3 = -0.75 * u1 * u2 / (u * f) +
                          0.375 * u1 * u1 * u1 / (u * u * f);
        return Jet{f, f1, f2, f3};
    });
}

RadialScalarField::Jet RadialScalarField::eval(double t) const {
    if (!impl_) throw DomainError("empty radial field");
    return impl_->eval(t);
}

double RadialScalarField::lo() const {
    if (!impl_) throw DomainError("empty radial field");
    return impl_->lo;
}

double RadialScalarField::hi() const {
    if (!impl_) throw DomainError("empty radial field");
    return impl_->hi;
}

bool RadialScalarField::spline_backed() const {
    return impl_ && impl_->is_spline;
}

RadialScalarField RadialScalarField::scaled(double factor) const {
    RadialScalarField base = *this;
    return from_jets(lo(), hi(), [base, factor](double t) {
        Jet j = base.eval(t);
        return Jet{factor * j.value, factor * j.d1, factor * j.d2,
                   factor * j.d3};
    });
}

}  // namespace ricci
