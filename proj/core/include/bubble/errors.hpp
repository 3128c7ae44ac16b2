#pragma once

#include <stdexcept>
#include <string>

namespace bubble {

/// Argument outside the domain where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a coordinate singularity (sin(theta) = 0, R = 0, ...).
class SingularEvaluationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Iterative method failed to converge, or produced a non-finite value.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed file or configuration input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Training produced a non-finite loss.
class TrainingError : public std::runtime_error {
 public:
  TrainingError(int epoch, const std::string& what);
  int epoch() const noexcept { return epoch_; }

 private:
  int epoch_;
};

}  // namespace bubble
