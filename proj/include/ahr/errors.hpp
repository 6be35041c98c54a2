#pragma once

#include <stdexcept>
#include <string>

namespace ahr {

// Faults that end a run with an abort broadcast. The same taxonomy is used
// by the machine and by the sequential reference evaluator.
enum class ErrorKind {
  CarOfAtom,
  CdrOfAtom,
  DivByZero,
  TypeError,
  UnboundSymbol,
  ExpansionLimit,
  PassiveMemoryFull,
  ActiveMemoryFull,
  FifoOverflow,
};

const char* to_string(ErrorKind kind);

// Bad token handed to the symbol interner.
struct LexError : std::runtime_error {
  explicit LexError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed source text. Form covers top-level shape problems (bad DEFUN,
// missing final expression, malformed COND clause, ...).
struct ParseError : std::runtime_error {
  enum class Kind { Unbalanced, IntRange, Dot, Form };
  ParseError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

// Structural errors caught before any simulation: unknown operator or an
// application whose arity disagrees with the primitive table or a DEFUN.
struct BuildError : std::runtime_error {
  enum class Kind { UnknownFunction, Arity };
  BuildError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

// Run-level machine fault raised by low-level operations (cell pool full,
// node pool full, ...). The engine converts it into an aborted report.
struct AbortError : std::runtime_error {
  explicit AbortError(ErrorKind k) : std::runtime_error(to_string(k)), kind(k) {}
  ErrorKind kind;
};

struct StepOnFinishedRun : std::logic_error {
  StepOnFinishedRun() : std::logic_error("step() called on a finished run") {}
};

}  // namespace ahr
