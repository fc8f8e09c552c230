#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fold9 {

enum class Errc {
  IndexOutOfRange,
  NonPlanar,
  MissingEmbedding,
  AdjacentGroupMembers,
  TooSmall,
  NotFound,
  PlanNotFound,
  InternalReductionFailure,
  MinDegreeViolation,
  PreconditionViolation,
  InvalidParams,
  NotAColoring,
  Timeout,
  TooLarge,
  GenerationFailure,
  ParseError,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

  /// True for codes that indicate a broken internal invariant rather than
  /// bad input.
  bool is_internal() const noexcept;

 private:
  Errc code_;
};

}  // namespace fold9
