#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace armforge {

// Base of all library errors. `kind()` is the stable machine-readable tag
// emitted in the CLI's error JSON; `what()` is the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error("DomainError", message) {}
};

// Bad or missing configuration data (files, material tables, color maps).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& message) : Error("ConfigError", message) {}
};

// Structured input rejected by a validation pass.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message) : Error("ValidationError", message) {}
};

// Caller broke an API precondition (dimension mismatch, state from another arm).
class ContractViolation : public Error {
public:
    explicit ContractViolation(const std::string& message) : Error("ContractViolation", message) {}
};

// Inverse kinematics target lies outside the reachable sphere.
class UnreachableError : public Error {
public:
    UnreachableError(const std::string& message, double target_distance, double reach)
        : Error("Unreachable", message), target_distance(target_distance), reach(reach) {}

    double target_distance;
    double reach;
};

// Iterative solve ran out of iterations; carries the best residual seen.
class NoSolutionError : public Error {
public:
    NoSolutionError(const std::string& message, double best_residual, int iterations)
        : Error("NoSolution", message), best_residual(best_residual), iterations(iterations) {}

    double best_residual;
    int iterations;
};

// Object cannot be localized because it lies outside the sensing volume.
class NotVisibleError : public Error {
public:
    explicit NotVisibleError(const std::string& message) : Error("NotVisible", message) {}
};

} // namespace armforge
