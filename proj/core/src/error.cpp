#include "fmw/error.hpp"

namespace fmw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidVocabulary: return "InvalidVocabulary";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::NoIntegerUniverse: return "NoIntegerUniverse";
    case ErrorCode::VocabMismatch: return "VocabMismatch";
    case ErrorCode::NotAristotelian: return "NotAristotelian";
    case ErrorCode::MalformedBenc: return "MalformedBenc";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::IncompleteInput: return "IncompleteInput";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IllFormedFormula: return "IllFormedFormula";
    case ErrorCode::WrongSourceVocabulary: return "WrongSourceVocabulary";
    case ErrorCode::NoOrderInTarget: return "NoOrderInTarget";
    case ErrorCode::OrderInTarget: return "OrderInTarget";
    case ErrorCode::AristotelianTarget: return "AristotelianTarget";
    case ErrorCode::EmptyString: return "EmptyString";
    case ErrorCode::RecursionBudgetExhausted: return "RecursionBudgetExhausted";
    case ErrorCode::PositivityViolation: return "PositivityViolation";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::InvalidGrammar: return "InvalidGrammar";
    case ErrorCode::InvalidMachine: return "InvalidMachine";
    case ErrorCode::PayloadNotCharFree: return "PayloadNotCharFree";
    case ErrorCode::FragmentMismatch: return "FragmentMismatch";
    case ErrorCode::MachineKindMismatch: return "MachineKindMismatch";
    case ErrorCode::Config: return "Config";
  }
  return "Unknown";
}

}  // namespace fmw
