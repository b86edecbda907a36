#pragma once

#include <stdexcept>
#include <string>

namespace anyonlab {

/// Input lies on a singular set of the operation (flux point, discontinuity line, coincident points).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Request exceeds a documented size or stability budget.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Caller violated a precondition on shapes or structure (dimension mismatch, non-Hermitian input).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Discretization setup is not admissible (e.g. flux on a grid vertex).
class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Iterative solver did not reach the requested accuracy.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace anyonlab
