#pragma once

#include <stdexcept>
#include <string>

namespace reecd {

/// Argument outside the mathematical domain of an operation
/// (non-prime modulus, gcd(0, 0), index below 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// val_p(0) has no value.
class UndefinedValuation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Invalid group parameters: even or too small f, d not dividing f,
/// enumeration bounds below their minimum.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested member does not exist (e.g. no even degree in a set).
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed-form degree formula failed to divide exactly. Always a
/// transcription bug in formula data, never a user error.
class FormulaError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The elimination did not end with exactly one survivor.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace reecd
