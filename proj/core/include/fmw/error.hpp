#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fmw {

enum class ErrorCode {
  InvalidArgument,
  InvalidVocabulary,
  InvalidStructure,
  NoIntegerUniverse,
  VocabMismatch,
  NotAristotelian,
  MalformedBenc,
  Malformed,
  IncompleteInput,
  SyntaxError,
  IllFormedFormula,
  WrongSourceVocabulary,
  NoOrderInTarget,
  OrderInTarget,
  AristotelianTarget,
  EmptyString,
  RecursionBudgetExhausted,
  PositivityViolation,
  AlphabetMismatch,
  InvalidGrammar,
  InvalidMachine,
  PayloadNotCharFree,
  FragmentMismatch,
  MachineKindMismatch,
  Config,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library; `code()` tells callers
/// which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace fmw
