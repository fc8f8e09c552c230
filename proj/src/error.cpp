#include "fold9/error.hpp"

namespace fold9 {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NonPlanar: return "NonPlanar";
    case Errc::MissingEmbedding: return "MissingEmbedding";
    case Errc::AdjacentGroupMembers: return "AdjacentGroupMembers";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotFound: return "NotFound";
    case Errc::PlanNotFound: return "PlanNotFound";
    case Errc::InternalReductionFailure: return "InternalReductionFailure";
    case Errc::MinDegreeViolation: return "MinDegreeViolation";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NotAColoring: return "NotAColoring";
    case Errc::Timeout: return "Timeout";
    case Errc::TooLarge: return "TooLarge";
    case Errc::GenerationFailure: return "GenerationFailure";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

bool Error::is_internal() const noexcept {
  return code_ == Errc::NotFound || code_ == Errc::PlanNotFound ||
         code_ == Errc::InternalReductionFailure;
}

}  // namespace fold9
