#pragma once

#include <stdexcept>
#include <string>

namespace gravbound {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation at or beyond the horizon T_max, where sigma(t) diverges.
class HorizonError : public DomainError {
public:
    explicit HorizonError(const std::string& what) : DomainError(what) {}
};

/// Dimension mismatch between states, spectra or matrices.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Unknown preset or lookup key.
class LookupError : public std::invalid_argument {
public:
    explicit LookupError(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical integration produced non-finite entries.
class InstabilityError : public std::runtime_error {
public:
    InstabilityError(const std::string& what, std::size_t step)
        : std::runtime_error(what + " at step " + std::to_string(step)), step_index(step) {}
    std::size_t step_index;
};

/// A type invariant (normalization, hermiticity, positivity, ...) failed.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace gravbound
