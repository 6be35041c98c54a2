#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "ahr/value.hpp"

namespace ahr {

struct Definition {
  std::vector<int32_t> formals;  // distinct symbol ids
  Value body;                    // exactly one body expression
};

// Host-loaded program environment: DEFUN name -> definition. A body may
// reference its own name and names defined earlier in the file; forward
// references are rejected when the program is loaded.
using Definitions = std::map<int32_t, Definition>;

struct Program {
  Definitions defs;
  Value main;  // the single expression evaluated by the run
};

// Parses and statically validates a source file: a sequence of DEFUN forms
// followed by exactly one expression. Checks operator-position symbols
// against the primitive table and the definitions, fixed arities, QUOTE and
// COND shapes, and DEFUN formal lists. Throws ParseError / BuildError.
Program load_program(std::string_view source, PassiveMemory& memory);

}  // namespace ahr
