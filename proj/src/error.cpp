#include "greenseq/error.hpp"

namespace greenseq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MalformedQuiver: return "MalformedQuiver";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::SignCoherenceViolation: return "SignCoherenceViolation";
    case ErrorKind::NotGreenAtStep: return "NotGreenAtStep";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::ReplayMismatch: return "ReplayMismatch";
    case ErrorKind::UnsupportedClass: return "UnsupportedClass";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotABranchQuiver: return "NotABranchQuiver";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NotTypeIVCore: return "NotTypeIVCore";
    case ErrorKind::ArcNotInTriangulation: return "ArcNotInTriangulation";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::ConstructionInvariantViolated: return "ConstructionInvariantViolated";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

NotGreenError::NotGreenError(int step, int vertex)
    : Error(ErrorKind::NotGreenAtStep,
            "step " + std::to_string(step) + " mutates red vertex " + std::to_string(vertex)),
      step_(step),
      vertex_(vertex) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace greenseq
