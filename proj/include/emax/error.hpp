#pragma once

#include <stdexcept>
#include <string>

namespace emax {

/// Malformed or out-of-range input (bad vertex, invalid bipartition, parse failure).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on a value that violates its documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a combinatorial guarantee that should follow from a genus
/// hypothesis does not hold for the given input.
class HypothesisViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Certified arithmetic could not decide a comparison within its precision cap.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace emax
