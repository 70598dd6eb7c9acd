#include "kappa1/error.hpp"

namespace kappa1 {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadArgument: return "bad argument";
    case ErrorCode::TooSmall: return "graph too small";
    case ErrorCode::CapExceeded: return "cap exceeded";
    case ErrorCode::ParseError: return "parse error";
    case ErrorCode::IoError: return "io error";
    case ErrorCode::EmptyTerminal: return "empty terminal set";
    case ErrorCode::Inseparable: return "terminals joined by an edge";
    case ErrorCode::Disconnected: return "graph is disconnected";
    case ErrorCode::NotAnEdge: return "not an edge";
    case ErrorCode::NotASuperCut: return "not a super cut";
    case ErrorCode::CannotAugment: return "cut cannot be augmented";
    case ErrorCode::BudgetExceeded: return "budget exceeded";
    case ErrorCode::DomainError: return "outside formula domain";
    case ErrorCode::DuplicateVertex: return "duplicate vertex";
    case ErrorCode::LabelOutOfRange: return "label out of range";
    case ErrorCode::UnclassifiedTriple: return "unclassified triple";
    case ErrorCode::Undecided: return "undecided";
  }
  return "unknown error";
}

}  // namespace kappa1
