#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Query outside the closed domain of a radial field (no extrapolation).
struct DomainError : Error {
    using Error::Error;
};

/// Warping function at or below the coordinate-singularity guard.
struct SingularWarp : Error {
    using Error::Error;
};

/// Lapse f <= 0 in the conformal radial ansatz.
struct NonpositiveLapse : Error {
    using Error::Error;
};

/// Metric not invertible / not positive definite at a stencil node.
struct SingularMetric : Error {
    using Error::Error;
};

/// Finite-difference stencil leaves the chart's validity box.
struct StencilOutOfRange : Error {
    using Error::Error;
};

/// Operation requires a different h-mode (e.g. constant h).
struct WrongHMode : Error {
    using Error::Error;
};

/// Potential function vanishes where a division by f is required.
struct ZeroPotential : Error {
    using Error::Error;
};

/// |grad f| = 0 at the queried point.
struct CriticalPoint : Error {
    using Error::Error;
};

/// Scalar curvature nonzero where an s = 0 hypothesis is required.
struct NonzeroScalar : Error {
    using Error::Error;
};

/// Dimension outside the supported range.
struct DimensionError : Error {
    using Error::Error;
};

/// Initial data rejected by the integrator.
struct BadInitialData : Error {
    using Error::Error;
};

/// Integration step produced a non-finite state.
struct StepFailure : Error {
    using Error::Error;
};

/// Degenerate coefficient in the h = c s f identity (boundary value of c).
struct DegenerateCoefficient : Error {
    using Error::Error;
};

/// Invalid CLI / JSON configuration.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace ricci
