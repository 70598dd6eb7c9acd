#pragma once

#include <stdexcept>
#include <string>

namespace kappa1 {

enum class ErrorCode {
  BadArgument,       // malformed call (overlapping terminals, bad n/k, ...)
  TooSmall,          // graph has too few vertices for the operation
  CapExceeded,       // generated graph would exceed the safety cap
  ParseError,        // graph text format violation (message carries the line)
  IoError,           // file could not be read or written
  EmptyTerminal,     // a terminal set of a cut computation is empty
  Inseparable,       // an edge joins the two terminal sets
  Disconnected,      // operation requires a connected graph
  NotAnEdge,         // constructive cut requires an edge (u,v)
  NotASuperCut,      // constructed cut failed certificate validation
  CannotAugment,     // fewer than two components of size >= 2 remain
  BudgetExceeded,    // oracle budget exhausted
  DomainError,       // formula argument outside its domain
  DuplicateVertex,   // triple classification got two equal label sets
  LabelOutOfRange,   // label exceeds n
  UnclassifiedTriple,// claim bound asked for an Other triple
  Undecided,         // interval straddles kappa; no verdict possible
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace kappa1
