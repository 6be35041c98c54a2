#pragma once

#include <string_view>
#include <vector>

#include "ahr/value.hpp"

namespace ahr {

// S-expression reader over a PassiveMemory.
//
// Grammar: lists are right-nested pairs terminated by NIL, "(A . B)" is a
// dotted pair, integer tokens ([+-]?digits, 32-bit signed) become Int,
// the tokens NIL and () both read as the NIL value, everything else is
// interned as a Symbol. ";" starts a comment running to end of line.
class Reader {
 public:
  Reader(std::string_view text, PassiveMemory& memory) : text_(text), memory_(&memory) {}

  // First S-expression in the text; ParseError when there is none.
  Value read_one();

  // Every top-level S-expression until end of input.
  std::vector<Value> read_all();

  bool at_end();  // skips blanks/comments, then checks

 private:
  Value read_expr();
  Value read_list_tail();
  Value atom_from_token(std::string_view token);
  std::string_view next_token();
  void skip_blank();

  std::string_view text_;
  PassiveMemory* memory_;
  size_t pos_ = 0;
};

// Convenience wrappers.
Value read(std::string_view text, PassiveMemory& memory);
inline std::string print(const PassiveMemory& memory, Value v) { return memory.print(v); }

}  // namespace ahr
