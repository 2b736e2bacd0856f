#pragma once

#include <stdexcept>
#include <string>

namespace patterned {

/// Bad argument supplied by the caller (out-of-range integer, malformed word, ...).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Argument is well-formed but outside the domain of the operation,
/// e.g. asking for the turn of a non-patterned number.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class ResourceLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Iterative solver failed to converge.
class NumericalFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Internal invariant broken; seeing this means a bug.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace patterned
