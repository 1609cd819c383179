#pragma once

#include <stdexcept>
#include <string>

namespace dyadic {

/// Raised when a resolution, rank, or frequency is out of range for the
/// object it is applied to (invalid resolution, mismatched resolutions,
/// rank finer than the carrier, frequency at or above 2^M).
class ResolutionError : public std::invalid_argument {
public:
    explicit ResolutionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised for invalid numeric parameters: zero counts, empty ranges,
/// non-positive exponents, alpha at or below the pole at -1.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace dyadic
