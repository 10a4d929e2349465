#pragma once

#include <stdexcept>
#include <string>

namespace chopf {

/// Input outside the mathematical domain of an operation (negative weight,
/// non-invertible constant term, non-integral result over the integers, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operands live in incompatible algebras or bases.
class TypeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured computational bound (cobar level, cohomology weight, cap) was exceeded.
class CapabilityError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace chopf
