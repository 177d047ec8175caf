#include "ricci/fd_oracle.hpp"

#include <cmath>
#include <sstream>

namespace ricci {

namespace {

using Vec = std::vector<double>;

// Dense inverse by Gauss-Jordan with partial pivoting; d <= 8 in practice.
Vec invert(const Vec& a_in, int d) {
    Vec a = a_in;
    Vec inv(static_cast<size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) inv[i * d + i] = 1.0;
    for (int col = 0; col < d; ++col) {
        int piv = col;
        double best = std::abs(a[col * d + col]);
        for (int r = col + 1; r < d; ++r) {
            const double v = std::abs(a[r * d + col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (!(best > 1e-14))
            throw SingularMetric("metric not invertible at a stencil node");
        if (piv != col) {
            for (int c = 0; c < d; ++c) {
                std::swap(a[piv * d + c], a[col * d + c]);
                std::swap(inv[piv * d + c], inv[col * d + c]);
            }
        }
        const double p = a[col * d + col];
        for (int c = 0; c < d; ++c) {
            a[col * d + c] /= p;
            inv[col * d + c] /= p;
        }
        for (int r = 0; r < d; ++r) {
            if (r == col) continue;
            const double m = a[r * d + col];
            if (m == 0.0) continue;
            for (int c = 0; c < d; ++c) {
                a[r * d + c] -= m * a[col * d + c];
                inv[r * d + c] -= m * inv[col * d + c];
            }
        }
    }
    return inv;
}

struct Patch {
    const MetricChart* chart;
    double h;

    void check_bounds(std::span<const double> x) const {
        for (int i = 0; i < chart->dim; ++i) {
            if (x[i] < chart->lo[i] || x[i] > chart->hi[i]) {
                std::ostringstream os;
                os << "stencil node axis " << i << " at " << x[i]
                   << " outside chart box";
                throw StencilOutOfRange(os.str());
            }
        }
    }

    Vec metric(std::span<const double> x) const {
        check_bounds(x);
        const int d = chart->dim;
        Vec g(static_cast<size_t>(d) * d, 0.0);
        chart->eval(x, g.data());
        return g;
    }

    // Christoffel symbols Gamma[k][i][j] at x (3-point central d g).
    Vec christoffel(const Vec& x0) const {
        const int d = chart->dim;
        const Vec g = metric(x0);
        const Vec ginv = invert(g, d);
        // dg[l][i][j] = d_l g_ij
        Vec dg(static_cast<size_t>(d) * d * d, 0.0);
        Vec xp = x0, xm = x0;
        for (int l = 0; l < d; ++l) {
            xp[l] = x0[l] + h;
            xm[l] = x0[l] - h;
            const Vec gp = metric(xp);
            const Vec gm = metric(xm);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    dg[(l * d + i) * d + j] =
                        (gp[i * d + j] - gm[i * d + j]) / (2.0 * h);
            xp[l] = x0[l];
            xm[l] = x0[l];
        }
        Vec gamma(static_cast<size_t>(d) * d * d, 0.0);
        for (int k = 0; k < d; ++k)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    double sum = 0.0;
                    for (int l = 0; l < d; ++l)
                        sum += ginv[k * d + l] *
                               (dg[(i * d + j) * d + l] +
                                dg[(j * d + i) * d + l] -
                                dg[(l * d + i) * d + j]);
                    gamma[(k * d + i) * d + j] = 0.5 * sum;
                }
        return gamma;
    }
};

}  // namespace

FdCurvature fd_curvature_oracle(const MetricChart& chart,
                                std::span<const double> point, double h_fd) {
    if (chart.dim < 2) throw DimensionError("chart needs dim >= 2");
    if (!(h_fd > 0.0)) throw DomainError("h_fd must be positive");
    const int d = chart.dim;
    Patch patch{&chart, h_fd};

    Vec x0(point.begin(), point.end());
    const Vec gamma0 = patch.christoffel(x0);

    // dGamma[m][k][i][j] = d_m Gamma^k_ij (outer central differences)
    Vec dgamma(static_cast<size_t>(d) * d * d * d, 0.0);
    Vec xp = x0, xm = x0;
    for (int m = 0; m < d; ++m) {
        xp[m] = x0[m] + h_fd;
        xm[m] = x0[m] - h_fd;
        const Vec gp = patch.christoffel(xp);
        const Vec gm = patch.christoffel(xm);
        for (size_t q = 0; q < gp.size(); ++q)
            dgamma[m * gp.size() + q] = (gp[q] - gm[q]) / (2.0 * h_fd);
        xp[m] = x0[m];
        xm[m] = x0[m];
    }

    auto G = [&](int k, int i, int j) { return gamma0[(k * d + i) * d + j]; };
    auto dG = [&](int m, int k, int i, int j) {
        return dgamma[((m * d + k) * d + i) * d + j];
    };

    // Ric_{sig,nu} = R^mu_{sig mu nu}
    //   R^r_{s m n} = d_m G^r_{n s} - d_n G^r_{m s}
    //              + G^r_{m l} G^l_{n s} - G^r_{n l} G^l_{m s}
    FdCurvature out;
    out.dim = d;
    out.ricci.assign(static_cast<size_t>(d) * d, 0.0);
    for (int sig = 0; sig < d; ++sig)
        for (int nu = 0; nu < d; ++nu) {
            double sum = 0.0;
            for (int mu = 0; mu < d; ++mu) {
                double r = dG(mu, mu, nu, sig) - dG(nu, mu, mu, sig);
                for (int l = 0; l < d; ++l)
                    r += G(mu, mu, l) * G(l, nu, sig) -
                         G(mu, nu, l) * G(l, mu, sig);
                sum += r;
            }
            out.ricci[sig * d + nu] = sum;
        }

    const Vec g = patch.metric(x0);
    const Vec ginv = invert(g, d);
    double s = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s += ginv[i * d + j] * out.ricci[i * d + j];
    out.s = s;
    return out;
}

MetricChart warped_chart(const WarpedProductMetric& metric) {
    if (metric.ansatz != Ansatz::Warped)
        throw DomainError("warped_chart needs the warped ansatz");
    MetricChart chart;
    const int n = metric.n;
    chart.dim = n;
    chart.lo.assign(n, -0.5);
    chart.hi.assign(n, 0.5);
    chart.lo[0] = metric.profile.lo();
    chart.hi[0] = metric.profile.hi();
    const RadialScalarField b = metric.profile;
    const double k0 = metric.kappa0;
    chart.eval = [n, b, k0](std::span<const double> x, double* g) {
        const double bv = b.value(x[0]);
        double r2 = 0.0;
        for (int i = 1; i < n; ++i) r2 += x[i] * x[i];
        // conformal space-form fiber of normalized curvature k0
        const double sigma = 1.0 / (1.0 + 0.25 * k0 * r2);
        const double fib = bv * bv * sigma * sigma;
        for (int i = 0; i < n * n; ++i) g[i] = 0.0;
        g[0] = 1.0;
        for (int i = 1; i < n; ++i) g[i * n + i] = fib;
    };
    return chart;
}

MetricChart conformal_radial_chart(const RadialScalarField& f) {
    MetricChart chart;
    chart.dim = 3;
    chart.lo = {f.lo(), -0.5, -0.5};
    chart.hi = {f.hi(), 0.5, 0.5};
    const RadialScalarField lapse = f;
    chart.eval = [lapse](std::span<const double> x, double* g) {
        const double fv = lapse.value(x[0]);
        if (!(fv > 0.0)) throw NonpositiveLapse("lapse <= 0 on chart");
        const double r2 = x[1] * x[1] + x[2] * x[2];
        const double sigma = 1.0 / (1.0 + 0.25 * r2);  // unit S^2 fiber
        const double fib = x[0] * x[0] * sigma * sigma;
        for (int i = 0; i < 9; ++i) g[i] = 0.0;
        g[0] = 1.0 / (fv * fv);
        g[4] = fib;
        g[8] = fib;
    };
    return chart;
}

}  // namespace ricci
