#pragma once

#include <stdexcept>
#include <string>

namespace artinacyl {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind : int {
  kUsage = 1,
  kParse = 2,
  kHypothesis = 3,
  kResource = 4,
  kCheckFailed = 5,
  kInternal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

/// Malformed input document or structurally invalid value.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error(ErrorKind::kParse, message) {}
};

/// A mathematical precondition (irreducible, not a clique, finite parabolic,
/// ...) does not hold for the given input.
class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& message)
      : Error(ErrorKind::kHypothesis, message) {}
};

/// A configured search cap was hit. Never returned as a partial answer.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& message)
      : Error(ErrorKind::kResource, message) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error(ErrorKind::kInternal, message) {}
};

}  // namespace artinacyl
