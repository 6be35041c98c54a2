#include "ahr/value.hpp"

#include <cctype>

namespace ahr {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CarOfAtom: return "CarOfAtom";
    case ErrorKind::CdrOfAtom: return "CdrOfAtom";
    case ErrorKind::DivByZero: return "DivByZero";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::UnboundSymbol: return "UnboundSymbol";
    case ErrorKind::ExpansionLimit: return "ExpansionLimit";
    case ErrorKind::PassiveMemoryFull: return "PassiveMemoryFull";
    case ErrorKind::ActiveMemoryFull: return "ActiveMemoryFull";
    case ErrorKind::FifoOverflow: return "FifoOverflow";
  }
  return "?";
}

static bool valid_symbol_char(char c) {
  if (std::isspace(static_cast<unsigned char>(c))) return false;
  if (c == '(' || c == ')' || c == '.' || c == ';') return false;
  return static_cast<unsigned char>(c) >= '!' && static_cast<unsigned char>(c) <= '~';
}

int32_t SymbolTable::intern(std::string_view name) {
  if (name.empty()) throw LexError("empty symbol name");
  std::string folded;
  folded.reserve(name.size());
  for (char c : name) {
    if (!valid_symbol_char(c))
      throw LexError("bad character in symbol name: '" + std::string(name) + "'");
    folded.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  auto it = ids_.find(folded);
  if (it != ids_.end()) return it->second;
  int32_t id = static_cast<int32_t>(names_.size());
  names_.push_back(folded);
  ids_.emplace(std::move(folded), id);
  return id;
}

const std::string& SymbolTable::name(int32_t id) const {
  return names_.at(static_cast<size_t>(id));
}

PassiveMemory::PassiveMemory(size_t cell_capacity) : capacity_(cell_capacity) {
  static const char* const kPredefined[] = {
      "T", "QUOTE", "COND", "DEFUN", "CAR", "CDR", "CONS", "ATOM", "NULL",
      "EQ", "LIST", "+", "-", "*", "/", "<", ">", "="};
  for (const char* n : kPredefined) symbols_.intern(n);
}

std::optional<Value> PassiveMemory::try_cons(Value head, Value tail) {
  if (cells_.size() >= capacity_) return std::nullopt;
  cells_.push_back(Cell{head, tail});
  return Value::pair(static_cast<int32_t>(cells_.size() - 1));
}

Value PassiveMemory::cons(Value head, Value tail) {
  auto v = try_cons(head, tail);
  if (!v) throw AbortError(ErrorKind::PassiveMemoryFull);
  return *v;
}

const Cell& PassiveMemory::cell(Value pair) const {
  return cells_.at(static_cast<size_t>(pair.pair_index()));
}

bool PassiveMemory::equal(Value a, Value b) const {
  if (a.tag() != b.tag()) return false;
  if (!a.is_pair()) return a == b;
  return equal(car(a), car(b)) && equal(cdr(a), cdr(b));
}

std::optional<size_t> PassiveMemory::list_length(Value v) const {
  size_t n = 0;
  while (v.is_pair()) {
    ++n;
    v = cdr(v);
  }
  if (!v.is_nil()) return std::nullopt;
  return n;
}

Value PassiveMemory::list_from(const std::vector<Value>& items) {
  Value out = Value::nil();
  for (auto it = items.rbegin(); it != items.rend(); ++it) out = cons(*it, out);
  return out;
}

std::string PassiveMemory::print(Value v) const {
  std::string out;
  print_rec(v, out);
  return out;
}

void PassiveMemory::print_rec(Value v, std::string& out) const {
  switch (v.tag()) {
    case Tag::Nil:
      out += "NIL";
      return;
    case Tag::Int:
      out += std::to_string(v.int_value());
      return;
    case Tag::Symbol:
      out += symbol_name(v.symbol_id());
      return;
    case Tag::Pair: {
      out += '(';
      print_rec(car(v), out);
      Value rest = cdr(v);
      while (rest.is_pair()) {
        out += ' ';
        print_rec(car(rest), out);
        rest = cdr(rest);
      }
      if (!rest.is_nil()) {
        out += " . ";
        print_rec(rest, out);
      }
      out += ')';
      return;
    }
  }
}

}  // namespace ahr
