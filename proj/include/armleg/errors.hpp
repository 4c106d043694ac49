#pragma once

#include <stdexcept>
#include <string>

namespace armleg {

/// Bad input: malformed partition text, non-coprime slope, negative hook, ...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BoxOutsideDiagram : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class BoxInsideDiagram : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class OutOfRectangle : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The diagram does not fit under the diagonal of the Kp x Kq rectangle.
class FitError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// (a, l) is neither steep (northwest) nor flat (southeast) for the slope.
class SlopeConditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// h is undefined for some diagram of area n because p + q <= n.
class SlopeTooSmall : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidArrow : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonExactDivision : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownSuite : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A mechanically checked identity failed. Carries a human-readable witness.
class CounterexampleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace armleg
