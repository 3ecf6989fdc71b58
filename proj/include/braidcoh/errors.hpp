#pragma once

#include <stdexcept>
#include <string>

namespace braidcoh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text: expressions, scalars, JSON documents.
class ParseError : public Error {
 public:
  using Error::Error;
};

class PresentationError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

// Raised when a computation would need words above the configured degree window.
class TruncationExceeded : public Error {
 public:
  TruncationExceeded(int degree, int limit)
      : Error("degree " + std::to_string(degree) + " exceeds truncation " + std::to_string(limit)),
        degree_(degree),
        limit_(limit) {}
  int degree() const noexcept { return degree_; }
  int limit() const noexcept { return limit_; }

 private:
  int degree_;
  int limit_;
};

class NotABimonoid : public Error {
 public:
  using Error::Error;
};

// Operands belong to different algebras or incompatible layouts.
class PresentationMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidComplex : public Error {
 public:
  using Error::Error;
};

class ExactnessViolation : public Error {
 public:
  using Error::Error;
};

class LiftFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace braidcoh
