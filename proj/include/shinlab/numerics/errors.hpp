#pragma once

#include <stdexcept>
#include <string>

namespace shinlab {

// Argument outside the domain of a function (pole, branch cut, empty range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation point sits on a branch point or a branch cut.
class BranchError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Guarded floor/ceil could not separate the value from an integer.
class TieUnresolved : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precision escalation hit its cap without meeting the requested tolerance.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Observed data breaks a structural assumption (interval lengths, monotonicity).
class StructuralAnomaly : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A certified inequality that must hold came out false.
class CertificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace shinlab
