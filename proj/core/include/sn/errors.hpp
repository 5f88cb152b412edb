#pragma once

#include <stdexcept>
#include <string>

namespace sn {

/// Base of every failure raised by the library. All of them signal a violated
/// precondition or a refuted claim about the input, never an internal bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in S_n for different n.
class DimensionError : public Error {
 public:
  DimensionError(int expected, int got);
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Truncated kernel dimensions did not settle before the degree cap.
class NotStabilized : public Error {
 public:
  NotStabilized(int cap, int last_value);
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

/// A Laurent determinant is zero or has more than one term.
class NotMonomialUnit : public Error {
 public:
  using Error::Error;
};

/// The element is outside the ideal an operation requires.
class MembershipError : public Error {
 public:
  using Error::Error;
};

class FactorizationError : public Error {
 public:
  FactorizationError(std::string step, const std::string& detail);
  [[nodiscard]] const std::string& step() const { return step_; }

 private:
  std::string step_;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

inline void require_same_n(int expected, int got) {
  if (expected != got) throw DimensionError(expected, got);
}

}  // namespace sn
