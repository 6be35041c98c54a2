#include "ahr/processor.hpp"

#include <cassert>
#include <stdexcept>

namespace ahr {

namespace {

Value boolean(bool b) { return b ? Value::symbol(sym::T) : Value::nil(); }

ExecOutcome run_prim(const GraphNode& node, PassiveMemory& mem) {
  const auto& args = node.args;
  auto arg = [&](size_t i) { return args[i].value; };

  auto both_ints = [&]() { return arg(0).is_int() && arg(1).is_int(); };

  switch (node.op.prim) {
    case PrimId::Car:
      if (!arg(0).is_pair()) return ExecOutcome::fail(ErrorKind::CarOfAtom);
      return ExecOutcome::ok(mem.car(arg(0)));
    case PrimId::Cdr:
      if (!arg(0).is_pair()) return ExecOutcome::fail(ErrorKind::CdrOfAtom);
      return ExecOutcome::ok(mem.cdr(arg(0)));
    case PrimId::Cons: {
      auto cell = mem.try_cons(arg(0), arg(1));
      if (!cell) return ExecOutcome::fail(ErrorKind::PassiveMemoryFull);
      return ExecOutcome::ok(*cell);
    }
    case PrimId::Atom:
      return ExecOutcome::ok(boolean(!arg(0).is_pair()));
    case PrimId::Null:
      return ExecOutcome::ok(boolean(arg(0).is_nil()));
    case PrimId::Eq:
      return ExecOutcome::ok(boolean(arg(0) == arg(1)));
    case PrimId::List: {
      Value acc = Value::nil();
      for (size_t i = args.size(); i-- > 0;) {
        auto cell = mem.try_cons(arg(i), acc);
        if (!cell) return ExecOutcome::fail(ErrorKind::PassiveMemoryFull);
        acc = *cell;
      }
      return ExecOutcome::ok(acc);
    }
    case PrimId::Add:
      if (!both_ints()) return ExecOutcome::fail(ErrorKind::TypeError);
      return ExecOutcome::ok(Value::integer(wrap_i32(
          int64_t{arg(0).int_value()} + int64_t{arg(1).int_value()})));
    case PrimId::Sub:
      if (!both_ints()) return ExecOutcome::fail(ErrorKind::TypeError);
      return ExecOutcome::ok(Value::integer(wrap_i32(
          int64_t{arg(0).int_value()} - int64_t{arg(1).int_value()})));
    case PrimId::Mul:
      if (!both_ints()) return ExecOutcome::fail(ErrorKind::TypeError);
      return ExecOutcome::ok(Value::integer(wrap_i32(
          int64_t{arg(0).int_value()} * int64_t{arg(1).int_value()})));
    case PrimId::Div: {
      if (!both_ints()) return ExecOutcome::fail(ErrorKind::TypeError);
      if (arg(1).int_value() == 0) return ExecOutcome::fail(ErrorKind::DivByZero);
      int64_t q = int64_t{arg(0).int_value()} / int64_t{arg(1).int_value()};
      return ExecOutcome::ok(Value::integer(wrap_i32(q)));
    }
    case PrimId::Lt:
      if (!both_ints()) return ExecOutcome::fail(ErrorKind::TypeError);
      return ExecOutcome::ok(boolean(arg(0).int_value() < arg(1).int_value()));
    case PrimId::Gt:
      if (!both_ints()) return ExecOutcome::fail(ErrorKind::TypeError);
      return ExecOutcome::ok(boolean(arg(0).int_value() > arg(1).int_value()));
    case PrimId::NumEq:
      if (!both_ints()) return ExecOutcome::fail(ErrorKind::TypeError);
      return ExecOutcome::ok(boolean(arg(0).int_value() == arg(1).int_value()));
  }
  throw std::logic_error("unhandled primitive");
}

}  // namespace

ExecOutcome execute(const GraphNode& node, PassiveMemory& mem) {
  assert(node.pending == 0);
  switch (node.op.kind) {
    case NodeOp::Kind::Prim:
      return run_prim(node, mem);
    case NodeOp::Kind::Const:
      return ExecOutcome::ok(node.op.payload);
    case NodeOp::Kind::VarRef:
      return ExecOutcome::fail(ErrorKind::UnboundSymbol);
    case NodeOp::Kind::Apply:
    case NodeOp::Kind::Cond:
      break;
  }
  throw std::logic_error("execute() called on an expanding node");
}

Cycle service_time(const GraphNode& node, const CostModel& cm, size_t created) {
  switch (node.op.kind) {
    case NodeOp::Kind::Prim:
      return cm.primitive_cost(node.op.prim, node.args.size());
    case NodeOp::Kind::Const:
    case NodeOp::Kind::VarRef:
      return cm.constant;
    case NodeOp::Kind::Apply:
    case NodeOp::Kind::Cond:
      return cm.expand_per_node * created;
  }
  return 0;
}

}  // namespace ahr
