#pragma once

#include <stdexcept>
#include <string>

namespace bvc {

// Malformed input: bad ids, duplicate approvals, inconsistent documents.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input is well formed but violates a precondition of the operation,
// e.g. a Bucklin query over a vote that is not a full ranking.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exhaustive search would exceed the configured enumeration cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A source instance lies outside the domain a construction is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace bvc
