#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adjunct {

enum class ErrorCode {
  MalformedInput,
  MissingComposite,
  AssociativityViolation,
  IdentityViolation,
  ClosureBoundExceeded,
  InconsistentPresentation,
  UnknownObject,
  NotFunctorial,
  LimitAbsentInSource,
  WitnessNotInitial,
  OracleBoundExceeded,
  LawViolation,
  NotANerve,
  CoproductAbsent,
  PushoutAbsent,
  ColimitAbsent,
  ParseError,
  UnknownVerb,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

// Every engine failure carries a code so callers (and the CLI) can branch on
// the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace adjunct
