#pragma once

#include <stdexcept>
#include <string>

namespace planar {

/// Invalid construction parameters (even or composite p, bad modulus, bad index).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside an operation's domain, e.g. a zero where a unit is required.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A precondition on the mathematical input did not hold (typically: f was not
/// planar or not homogeneous after all).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// W(a,b) is not of the form +-p*w^l.
class NotPlanarForm : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The point set does not determine a unique conic.
class NotConic : public std::runtime_error {
public:
    NotConic(const std::string& what, std::size_t nullspace_dim)
        : std::runtime_error(what), nullspace_dim_(nullspace_dim) {}
    std::size_t nullspace_dim() const noexcept { return nullspace_dim_; }

private:
    std::size_t nullspace_dim_;
};

} // namespace planar
