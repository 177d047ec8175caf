#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace ricci {

enum class IdentityId {
    Eq1,
    Trace,
    Dh,
    DeltaH,
    F2s,
    Bochner,
    ScalarInequality,
    CsfGradient,
    SignFacts,
    Lemma51,
    Eigenstructure,
    Cotton,
    Weyl,
    TTensor,
};

std::string to_string(IdentityId id);
IdentityId identity_from_string(const std::string& name);

/// Residuals of one identity over a grid; pass iff max_abs <= tolerance.
struct IdentityResidualReport {
    IdentityId identity_id = IdentityId::Eq1;
    std::vector<double> grid;
    std::vector<double> residuals;
    double max_abs = 0.0;
    double tolerance = 0.0;
    bool pass = false;

    nlohmann::ordered_json to_json() const;
};

/// Evaluate a pointwise residual over a grid and aggregate.
IdentityResidualReport build_report(IdentityId id,
                                    const std::vector<double>& grid,
                                    const std::function<double(double)>& fn,
                                    double tolerance);

/// Uniform inclusive grid.
std::vector<double> linspace(double lo, double hi, int count);

/// Uniform grid excluding a relative margin at both domain ends.
std::vector<double> interior_grid(double lo, double hi, int count,
                                  double margin = 0.01);

}  // namespace ricci
