#pragma once

#include <stdexcept>
#include <string>

namespace hdsnr {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched vector/matrix dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// Covariance specification is invalid or numerically singular.
struct CovarianceError : Error {
    using Error::Error;
};

/// Coefficient pattern cannot be placed in the requested dimension.
struct PatternError : Error {
    using Error::Error;
};

/// Estimator requested outside its dimension regime (e.g. OLS with d >= n).
struct RegimeError : Error {
    using Error::Error;
};

/// Design matrix is rank-deficient or too ill-conditioned to solve.
struct SingularDesignError : Error {
    using Error::Error;
};

/// Estimated second spectral moment is too close to zero to divide by.
struct DegenerateSpectrumError : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of a formula.
struct DomainError : Error {
    using Error::Error;
};

/// Requested computation exceeds a hard complexity cap.
struct ComplexityError : Error {
    using Error::Error;
};

/// A matrix argument that must be symmetric is not.
struct SymmetryError : Error {
    using Error::Error;
};

/// Signal-to-noise ratio requested but the stability guard failed.
struct SnrUndefinedError : Error {
    using Error::Error;
};

}  // namespace hdsnr
