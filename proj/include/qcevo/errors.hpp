#pragma once

#include <stdexcept>
#include <string>

namespace qcevo {

/// Raised for invalid configuration values or operation preconditions on
/// user-supplied parameters (ranges, rates, qubit counts).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a genome or state violates a structural invariant.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace qcevo
