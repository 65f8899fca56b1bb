#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blockgraph {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A division that would leave the ring of cyclotomic integers.
class NotAlgebraicInteger : public Error {
 public:
  using Error::Error;
};

class ConductorMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed document or cyclotomic expression.
class SyntaxError : public Error {
 public:
  using Error::Error;
};

/// A character table that fails one or more of the consistency relations.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(describe(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string describe(const std::vector<std::string>& violations) {
    std::string text = "validation failed:";
    for (const auto& v : violations) text += " " + v;
    return text;
  }

  std::vector<std::string> violations_;
};

class VertexNotFound : public Error {
 public:
  using Error::Error;
};

class InvalidDescriptor : public Error {
 public:
  using Error::Error;
};

class ConditionViolated : public Error {
 public:
  using Error::Error;
};

class BadPrime : public Error {
 public:
  using Error::Error;
};

class DefiningPrime : public Error {
 public:
  using Error::Error;
};

class NotADivisor : public Error {
 public:
  using Error::Error;
};

class TitsGroup : public Error {
 public:
  using Error::Error;
};

class SizeExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace blockgraph
