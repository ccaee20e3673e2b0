#pragma once

#include <stdexcept>
#include <string>

namespace diracrose {

// Precondition violated by the caller (bad counts, bad ranges, bad parameters).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A spin configuration the secular equation does not cover (w_b = +-id).
class InvalidConfiguration : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Evaluation requested on (or numerically at) a pole of the secular function.
class PoleProximity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Asymptotic formula requested outside the range where it is meaningful.
class OutOfDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Series cap exceeded, quadrature did not converge, and similar.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diracrose
