// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace fr3 {

/// Base class for computation failures. The CLI maps these to exit code 1.
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numeric input outside the mathematical domain of an operation.
struct DomainError : ComputeError {
    using ComputeError::ComputeError;
};

/// Aggregation scheme with no carriers.
struct InvalidSchemeError : ComputeError {
    using ComputeError::ComputeError;
};

/// Contiguous aggregation requested over carriers with a gap.
struct ModeMismatchError : ComputeError {
    using ComputeError::ComputeError;
};

/// Pattern has no -3 dB crossing within the visible region.
struct BeamwidthUndefinedError : ComputeError {
    using ComputeError::ComputeError;
};

/// Numerical integration did not settle under grid refinement.
struct ConvergenceError : ComputeError {
    using ComputeError::ComputeError;
};

/// Zero-power channel where power is required (normalization, ratios).
struct EmptyChannelError : ComputeError {
    using ComputeError::ComputeError;
};

/// Distributions that cannot be brought onto a common angle grid.
struct ComparisonError : ComputeError {
    using ComputeError::ComputeError;
};

/// Surface too small to host a single element at the requested pitch.
struct ApertureTooSmallError : ComputeError {
    using ComputeError::ComputeError;
};

/// Invalid or inconsistent configuration. CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem failure. CLI exit code 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fr3
