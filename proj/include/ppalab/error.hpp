#pragma once

#include <stdexcept>
#include <string>

namespace ppalab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Point/set/operator dimensions disagree.
struct DimensionError : Error {
    using Error::Error;
};

/// Query point lies outside the operator's domain (empty image).
struct DomainError : Error {
    using Error::Error;
};

/// Result exists mathematically but leaves the supported set variants.
struct RepresentationError : Error {
    using Error::Error;
};

/// Operation requires a nonempty set.
struct EmptySetError : Error {
    using Error::Error;
};

/// Caller violated a documented precondition.
struct PreconditionError : Error {
    using Error::Error;
};

/// Model rejected because monotonicity (or maximality) is required.
struct MonotonicityError : Error {
    using Error::Error;
};

/// Scenario configuration error; carries the offending field path.
struct ConfigError : Error {
    ConfigError(const std::string& fieldPath, const std::string& what)
        : Error(fieldPath + ": " + what), path(fieldPath) {}
    std::string path;
};

}  // namespace ppalab
