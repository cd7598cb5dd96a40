#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace greenseq {

enum class ErrorKind {
  IndexOutOfRange,
  MalformedQuiver,
  Overflow,
  SignCoherenceViolation,
  NotGreenAtStep,
  ResourceLimit,
  ReplayMismatch,
  UnsupportedClass,
  HypothesisViolated,
  NotABranchQuiver,
  PreconditionViolated,
  BadIndex,
  NotTypeIVCore,
  ArcNotInTriangulation,
  NotComplete,
  ConstructionInvariantViolated,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when a mutation in a purported green sequence hits a red vertex.
class NotGreenError : public Error {
 public:
  NotGreenError(int step, int vertex);

  int step() const noexcept { return step_; }
  int vertex() const noexcept { return vertex_; }

 private:
  int step_;
  int vertex_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace greenseq
