#include "ricci/report.hpp"

#include <stdexcept>

#include "ricci/errors.hpp"

namespace ricci {

std::string to_string(IdentityId id) {
    switch (id) {
        case IdentityId::Eq1: return "eq1";
        case IdentityId::Trace: return "trace";
        case IdentityId::Dh: return "dh";
        case IdentityId::DeltaH: return "delta_h";
        case IdentityId::F2s: return "f2s";
        case IdentityId::Bochner: return "bochner";
        case IdentityId::ScalarInequality: return "scalar_inequality";
        case IdentityId::CsfGradient: return "csf_gradient";
        case IdentityId::SignFacts: return "sign_facts";
        case IdentityId::Lemma51: return "lemma51";
        case IdentityId::Eigenstructure: return "eigenstructure";
        case IdentityId::Cotton: return "cotton";
        case IdentityId::Weyl: return "weyl";
        case IdentityId::TTensor: return "t_tensor";
    }
    return "unknown";
}

IdentityId identity_from_string(const std::string& name) {
    static const std::vector<IdentityId> all = {
        IdentityId::Eq1,          IdentityId::Trace,
        IdentityId::Dh,           IdentityId::DeltaH,
        IdentityId::F2s,          IdentityId::Bochner,
        IdentityId::ScalarInequality, IdentityId::CsfGradient,
        IdentityId::SignFacts,    IdentityId::Lemma51,
        IdentityId::Eigenstructure, IdentityId::Cotton,
        IdentityId::Weyl,         IdentityId::TTensor,
    };
    for (IdentityId id : all)
        if (to_string(id) == name) return id;
    throw ConfigError("unknown identity id: " + name);
}

nlohmann::ordered_json IdentityResidualReport::to_json() const {
    nlohmann::ordered_json j;
    j["identity_id"] = to_string(identity_id);
    j["tolerance"] = tolerance;
    j["max_abs"] = max_abs;
    j["pass"] = pass;
    nlohmann::ordered_json samples = nlohmann::ordered_json::array();
    for (size_t i = 0; i < grid.size(); ++i) {
        nlohmann::ordered_json s;
        s["t"] = grid[i];
        s["residual"] = residuals[i];
        samples.push_back(std::move(s));
    }
    j["samples"] = std::move(samples);
    return j;
}

IdentityResidualReport build_report(IdentityId id,
                                    const std::vector<double>& grid,
                                    const std::function<double(double)>& fn,
                                    double tolerance) {
    IdentityResidualReport r;
    r.identity_id = id;
    r.grid = grid;
    r.tolerance = tolerance;
    r.residuals.reserve(grid.size());
    double max_abs = 0.0;
    for (double t : grid) {
        const double v = fn(t);
        r.residuals.push_back(v);
        max_abs = std::max(max_abs, std::abs(v));
    }
    r.max_abs = max_abs;
    r.pass = max_abs <= tolerance;
    return r;
}

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 2) throw ConfigError("grid count must be >= 2");
    std::vector<double> g(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        g[static_cast<size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    return g;
}

std::vector<double> interior_grid(double lo, double hi, int count,
                                  double margin) {
    const double span = hi - lo;
    return linspace(lo + margin * span, hi - margin * span, count);
}

}  // namespace ricci
