#pragma once

#include <stdexcept>
#include <string>

namespace normplane {

// Invalid space description or tool configuration. Raised when a plane is
// constructed from a bad NormSpec (asymmetric polygon, p out of range, ...)
// or when CLI options cannot be realized. Maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A parameter lies outside the documented domain of an operation
// (t outside [0,1], eps outside [0,2], empty grid, ...). Maps to exit code 2.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal self-check failed: a solver returned no root where one must
// exist, or a refined witness violates the orthogonality tolerance. This
// always indicates an estimator defect, never bad user input.
class InternalConsistencyError : public std::logic_error {
public:
    explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace normplane
