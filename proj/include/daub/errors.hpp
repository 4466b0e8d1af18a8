#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace daub {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid NumericContext or other bad argument.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An evaluation scheme failed to converge within its iteration cap.
class EvaluationFailure : public Error {
 public:
  using Error::Error;
};

// Argument at or too close to a singular point of the function.
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Argument outside the region where the representation is valid.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Working precision too low for the requested evaluation.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Newton refinement diverged, escaped its region, or hit the iteration cap.
class RefinementFailure : public Error {
 public:
  explicit RefinementFailure(const std::string& what, std::vector<std::string> trail = {})
      : Error(what), trail_(std::move(trail)) {}
  // Iterates visited before giving up, oldest first.
  const std::vector<std::string>& trail() const { return trail_; }

 private:
  std::vector<std::string> trail_;
};

// Input violates a structural invariant (pairing, lengths).
class StructuralError : public Error {
 public:
  using Error::Error;
};

}  // namespace daub
