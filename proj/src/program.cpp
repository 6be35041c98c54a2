#include "ahr/program.hpp"

#include <string>
#include <unordered_set>

#include "ahr/prims.hpp"
#include "ahr/reader.hpp"

namespace ahr {

namespace {

struct Validator {
  const PassiveMemory& mem;
  const Definitions& defs;

  std::string name_of(int32_t id) const { return mem.symbol_name(id); }

  // Checks operators, arities and special-form shapes. Variable boundness
  // is left to evaluation so that both evaluators report UnboundSymbol.
  void check(Value expr) const {
    if (!expr.is_pair()) return;  // atoms are fine here
    Value head = mem.car(expr);
    if (!head.is_symbol())
      throw ParseError(ParseError::Kind::Form, "operator must be a symbol");
    int32_t op = head.symbol_id();
    Value args = mem.cdr(expr);
    auto argc = mem.list_length(args);
    if (!argc)
      throw ParseError(ParseError::Kind::Form,
                       "improper argument list in call to " + name_of(op));

    if (op == sym::QUOTE) {
      if (*argc != 1)
        throw BuildError(BuildError::Kind::Arity, "QUOTE takes exactly one form");
      return;  // quoted data is not code
    }
    if (op == sym::COND) {
      for (Value c = args; c.is_pair(); c = mem.cdr(c)) {
        Value clause = mem.car(c);
        if (mem.list_length(clause) != std::optional<size_t>{2})
          throw ParseError(ParseError::Kind::Form,
                           "COND clause must be (test consequent)");
        check(mem.car(clause));
        check(mem.car(mem.cdr(clause)));
      }
      return;
    }
    if (op == sym::DEFUN)
      throw ParseError(ParseError::Kind::Form, "DEFUN allowed only at top level");

    size_t expected;
    if (auto prim = lookup_primitive(op)) {
      if (prim->arity == kVariadic) {
        expected = *argc;
      } else {
        expected = static_cast<size_t>(prim->arity);
      }
    } else if (auto it = defs.find(op); it != defs.end()) {
      expected = it->second.formals.size();
    } else {
      throw BuildError(BuildError::Kind::UnknownFunction,
                       "unknown function " + name_of(op));
    }
    if (*argc != expected)
      throw BuildError(BuildError::Kind::Arity,
                       name_of(op) + " expects " + std::to_string(expected) +
                           " argument(s), got " + std::to_string(*argc));
    for (Value a = args; a.is_pair(); a = mem.cdr(a)) check(mem.car(a));
  }
};

Definition parse_defun(Value form, PassiveMemory& mem, int32_t* name_out) {
  // (DEFUN name (formals...) body)
  if (mem.list_length(form) != std::optional<size_t>{4})
    throw ParseError(ParseError::Kind::Form, "DEFUN must be (DEFUN name (formals) body)");
  Value name = mem.car(mem.cdr(form));
  if (!name.is_symbol() || name.symbol_id() == sym::T)
    throw ParseError(ParseError::Kind::Form, "DEFUN name must be a symbol");
  if (lookup_primitive(name.symbol_id()))
    throw ParseError(ParseError::Kind::Form,
                     "cannot redefine primitive " + mem.symbol_name(name.symbol_id()));
  Value formals = mem.car(mem.cdr(mem.cdr(form)));
  Definition def;
  std::unordered_set<int32_t> seen;
  for (Value f = formals; !f.is_nil(); f = mem.cdr(f)) {
    if (!f.is_pair())
      throw ParseError(ParseError::Kind::Form, "formal list must be a proper list");
    Value v = mem.car(f);
    if (!v.is_symbol() || v.symbol_id() == sym::T)
      throw ParseError(ParseError::Kind::Form, "formals must be plain symbols");
    if (!seen.insert(v.symbol_id()).second)
      throw ParseError(ParseError::Kind::Form,
                       "duplicate formal " + mem.symbol_name(v.symbol_id()));
    def.formals.push_back(v.symbol_id());
  }
  def.body = mem.car(mem.cdr(mem.cdr(mem.cdr(form))));
  *name_out = name.symbol_id();
  return def;
}

bool is_defun_form(Value form, const PassiveMemory& mem) {
  return form.is_pair() && mem.car(form).is_symbol() &&
         mem.car(form).symbol_id() == sym::DEFUN;
}

}  // namespace

Program load_program(std::string_view source, PassiveMemory& memory) {
  std::vector<Value> forms = Reader(source, memory).read_all();
  if (forms.empty())
    throw ParseError(ParseError::Kind::Form, "program holds no forms");

  Program program;
  for (size_t i = 0; i + 1 < forms.size(); ++i) {
    if (!is_defun_form(forms[i], memory))
      throw ParseError(ParseError::Kind::Form,
                       "only the final form may be a plain expression");
    int32_t name = -1;
    Definition def = parse_defun(forms[i], memory, &name);
    if (program.defs.count(name))
      throw ParseError(ParseError::Kind::Form,
                       "duplicate DEFUN " + memory.symbol_name(name));
    program.defs.emplace(name, def);
    // Validate against definitions seen so far plus the new name itself, so
    // recursion works but forward references are rejected.
    Validator{memory, program.defs}.check(def.body);
  }
  if (is_defun_form(forms.back(), memory))
    throw ParseError(ParseError::Kind::Form, "program must end with an expression");
  program.main = forms.back();
  Validator{memory, program.defs}.check(program.main);
  return program;
}

}  // namespace ahr
