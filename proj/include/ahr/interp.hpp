#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ahr/errors.hpp"
#include "ahr/graph.hpp"
#include "ahr/program.hpp"
#include "ahr/value.hpp"

namespace ahr {

// Plain applicative-order evaluator over the same value representation.
// It shares the reader and program loader with the machine but none of the
// execution machinery, so the two can check each other.
class Interpreter {
 public:
  Interpreter(PassiveMemory& mem, const Definitions& defs, size_t max_depth = 10000)
      : mem_(&mem), defs_(&defs), max_depth_(max_depth) {}

  // throws AbortError on runtime errors
  Value eval(Value expr) { return eval_expr(expr, Env{}, 0); }

 private:
  Value eval_expr(Value expr, const Env& env, size_t depth);
  Value apply_primitive(int32_t fn, const std::vector<Value>& args);

  PassiveMemory* mem_;
  const Definitions* defs_;
  size_t max_depth_;
};

struct InterpRun {
  std::optional<std::string> value_text;
  std::optional<ErrorKind> error;
};

// Loads and evaluates a program, reporting the printed result or the error.
// Load-time exceptions (LexError, ParseError, BuildError) propagate.
InterpRun run_interpreter(std::string_view source, size_t cells = kDefaultCellCapacity,
                          size_t max_depth = 10000);

}  // namespace ahr
