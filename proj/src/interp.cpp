#include "ahr/interp.hpp"

#include <vector>

#include "ahr/prims.hpp"

namespace ahr {

namespace {
Value truth(bool b) { return b ? Value::symbol(sym::T) : Value::nil(); }
}  // namespace

Value Interpreter::eval_expr(Value expr, const Env& env, size_t depth) {
  switch (expr.tag()) {
    case Tag::Nil:
    case Tag::Int:
      return expr;
    case Tag::Symbol: {
      if (expr.symbol_id() == sym::T) return expr;
      for (const auto& [name, bound] : env) {
        if (name == expr.symbol_id()) return bound;
      }
      throw AbortError(ErrorKind::UnboundSymbol);
    }
    case Tag::Pair:
      break;
  }

  Value head = mem_->car(expr);
  int32_t fn = head.symbol_id();

  if (fn == sym::QUOTE) return mem_->car(mem_->cdr(expr));

  if (fn == sym::COND) {
    for (Value c = mem_->cdr(expr); !c.is_nil(); c = mem_->cdr(c)) {
      Value clause = mem_->car(c);
      Value test = eval_expr(mem_->car(clause), env, depth);
      if (!test.is_nil()) {
        return eval_expr(mem_->car(mem_->cdr(clause)), env, depth);
      }
    }
    return Value::nil();
  }

  std::vector<Value> args;
  for (Value a = mem_->cdr(expr); !a.is_nil(); a = mem_->cdr(a)) {
    args.push_back(eval_expr(mem_->car(a), env, depth));
  }

  if (lookup_primitive(fn)) return apply_primitive(fn, args);

  const Definition& def = defs_->at(fn);
  if (depth >= max_depth_) throw AbortError(ErrorKind::ExpansionLimit);
  Env inner;
  inner.reserve(def.formals.size());
  for (size_t i = 0; i < def.formals.size(); ++i) {
    inner.emplace_back(def.formals[i], args[i]);
  }
  return eval_expr(def.body, inner, depth + 1);
}

Value Interpreter::apply_primitive(int32_t fn, const std::vector<Value>& a) {
  auto want_int = [](Value v) {
    if (!v.is_int()) throw AbortError(ErrorKind::TypeError);
    return int64_t{v.int_value()};
  };
  auto cons = [&](Value h, Value t) {
    auto cell = mem_->try_cons(h, t);
    if (!cell) throw AbortError(ErrorKind::PassiveMemoryFull);
    return *cell;
  };

  switch (fn) {
    case sym::CAR:
      if (!a[0].is_pair()) throw AbortError(ErrorKind::CarOfAtom);
      return mem_->car(a[0]);
    case sym::CDR:
      if (!a[0].is_pair()) throw AbortError(ErrorKind::CdrOfAtom);
      return mem_->cdr(a[0]);
    case sym::CONS:
      return cons(a[0], a[1]);
    case sym::ATOM:
      return truth(!a[0].is_pair());
    case sym::NULLP:
      return truth(a[0].is_nil());
    case sym::EQ:
      return truth(a[0] == a[1]);
    case sym::LIST: {
      Value acc = Value::nil();
      for (size_t i = a.size(); i-- > 0;) acc = cons(a[i], acc);
      return acc;
    }
    case sym::ADD:
      return Value::integer(wrap_i32(want_int(a[0]) + want_int(a[1])));
    case sym::SUB:
      return Value::integer(wrap_i32(want_int(a[0]) - want_int(a[1])));
    case sym::MUL:
      return Value::integer(wrap_i32(want_int(a[0]) * want_int(a[1])));
    case sym::DIV: {
      int64_t x = want_int(a[0]);
      int64_t y = want_int(a[1]);
      if (y == 0) throw AbortError(ErrorKind::DivByZero);
      return Value::integer(wrap_i32(x / y));
    }
    case sym::LT:
      return truth(want_int(a[0]) < want_int(a[1]));
    case sym::GT:
      return truth(want_int(a[0]) > want_int(a[1]));
    case sym::NUM_EQ:
      return truth(want_int(a[0]) == want_int(a[1]));
  }
  throw AbortError(ErrorKind::UnboundSymbol);
}

InterpRun run_interpreter(std::string_view source, size_t cells, size_t max_depth) {
  PassiveMemory mem(cells);
  Program program = load_program(source, mem);
  Interpreter interp(mem, program.defs, max_depth);
  InterpRun out;
  try {
    Value v = interp.eval(program.main);
    out.value_text = mem.print(v);
  } catch (const AbortError& e) {
    out.error = e.kind;
  }
  return out;
}

}  // namespace ahr
