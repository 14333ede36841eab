#pragma once

#include <stdexcept>
#include <string>

namespace gammalase {

/// Input outside the mathematical or physical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Root-finding interval that does not bracket a sign change.
class BracketError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Non-finite intermediate value (NaN or overflow) during a computation.
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Kinematically forbidden configuration: light-cone singularity, closed
/// emission channel, vanishing denominator.
class KinematicError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Polarization channel whose amplitude vector vanishes identically.
class ClosedChannelError : public DomainError {
  public:
    using DomainError::DomainError;
};

}  // namespace gammalase
