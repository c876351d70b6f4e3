#pragma once

#include <stdexcept>
#include <string>

namespace pairstab {

// Malformed input: bad JSON, wrong field types, unparsable rationals.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates an operation's precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The parameter sits exactly on a wall, or the parameter range is empty.
class OnWallError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace pairstab
