#include "ahr/graph.hpp"

#include <cassert>
#include <stdexcept>

#include "ahr/errors.hpp"
#include "ahr/prims.hpp"

namespace ahr {

const char* to_string(NodeState s) {
  switch (s) {
    case NodeState::Waiting: return "Waiting";
    case NodeState::Ready: return "Ready";
    case NodeState::Enqueued: return "Enqueued";
    case NodeState::Dispatched: return "Dispatched";
    case NodeState::Executing: return "Executing";
    case NodeState::Done: return "Done";
    case NodeState::Aborted: return "Aborted";
  }
  return "?";
}

NodeId ActiveMemory::alloc(NodeOp op, size_t argc, Parent parent, NodeId creator) {
  if (nodes_.size() >= capacity_) throw AbortError(ErrorKind::ActiveMemoryFull);
  NodeId id = static_cast<NodeId>(nodes_.size());
  GraphNode n;
  n.id = id;
  n.op = std::move(op);
  n.args.resize(argc);
  n.pending = static_cast<uint32_t>(argc);
  n.parent = parent;
  n.creator = creator;
  nodes_.push_back(std::move(n));
  return id;
}

uint32_t ActiveMemory::fill_slot(NodeId id, uint32_t slot, Value v, NodeId from) {
  GraphNode& n = nodes_.at(id);
  Slot& s = n.args.at(slot);
  if (s.filled) throw std::logic_error("argument slot filled twice");
  assert(n.pending > 0);
  s.filled = true;
  s.value = v;
  n.pending -= 1;
  if (from != kNoNode) n.filled_by.push_back(from);
  return n.pending;
}

std::optional<Value> GraphBuilder::fold_const(Value expr, const Env& env) const {
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
    case Tag::Pair: {
      Value head = mem_->car(expr);
      if (head.is_symbol()) {
        if (head.symbol_id() == sym::QUOTE) return mem_->car(mem_->cdr(expr));
        if (head.symbol_id() == sym::COND && mem_->cdr(expr).is_nil()) return Value::nil();
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

BuildResult GraphBuilder::build_graph(Value expr, const Env& env, Parent parent) {
  BuildResult out;
  if (auto v = fold_const(expr, env)) {
    NodeOp op;
    op.kind = NodeOp::Kind::Const;
    op.payload = *v;
    out.root = graph_->alloc(std::move(op), 0, parent, creator_);
    out.created = 1;
    GraphNode& n = graph_->node(out.root);
    n.state = NodeState::Ready;
    out.ready.push_back(out.root);
    return out;
  }
  out.root = build_node(expr, env, parent, out.ready, out.created);
  return out;
}

NodeId GraphBuilder::build_node(Value expr, const Env& env, Parent parent,
                                std::vector<NodeId>& ready, size_t& created) {
  assert(expr.is_pair());
  Value head = mem_->car(expr);
  assert(head.is_symbol());
  int32_t fn = head.symbol_id();

  if (fn == sym::COND) {
    return build_cond(mem_->cdr(expr), std::make_shared<Env>(env), parent, ready, created);
  }

  NodeOp op;
  size_t argc = 0;
  if (auto prim = lookup_primitive(fn)) {
    op.kind = NodeOp::Kind::Prim;
    op.prim = prim->id;
    op.symbol = fn;
    argc = mem_->list_length(mem_->cdr(expr)).value();
  } else {
    auto it = defs_->find(fn);
    if (it == defs_->end()) throw BuildError(BuildError::Kind::UnknownFunction, "unknown function");
    op.kind = NodeOp::Kind::Apply;
    op.symbol = fn;
    argc = it->second.formals.size();
  }

  NodeId id = graph_->alloc(std::move(op), argc, parent, creator_);
  created += 1;

  Value rest = mem_->cdr(expr);
  for (uint32_t i = 0; i < argc; ++i) {
    Value arg = mem_->car(rest);
    rest = mem_->cdr(rest);
    if (auto v = fold_const(arg, env)) {
      graph_->fill_slot(id, i, *v, kNoNode);
    } else {
      build_node(arg, env, Parent::at(id, i), ready, created);
    }
  }

  GraphNode& n = graph_->node(id);
  if (n.pending == 0) {
    n.state = NodeState::Ready;
    ready.push_back(id);
  }
  return id;
}

NodeId GraphBuilder::build_cond(Value clauses, std::shared_ptr<const Env> env, Parent parent,
                                std::vector<NodeId>& ready, size_t& created) {
  assert(clauses.is_pair());
  NodeOp op;
  op.kind = NodeOp::Kind::Cond;
  op.payload = clauses;
  op.env = env;

  NodeId id = graph_->alloc(std::move(op), 1, parent, creator_);
  created += 1;

  Value test = mem_->car(mem_->car(clauses));
  if (auto v = fold_const(test, *env)) {
    graph_->fill_slot(id, 0, *v, kNoNode);
  } else {
    build_node(test, *env, Parent::at(id, 0), ready, created);
  }

  GraphNode& n = graph_->node(id);
  if (n.pending == 0) {
    n.state = NodeState::Ready;
    ready.push_back(id);
  }
  return id;
}

Expansion GraphBuilder::expand_apply(NodeId node) {
  GraphNode& n = graph_->node(node);
  assert(n.op.kind == NodeOp::Kind::Apply);
  assert(n.pending == 0);

  const Definition& def = defs_->at(n.op.symbol);
  Env env;
  env.reserve(def.formals.size());
  for (size_t i = 0; i < def.formals.size(); ++i) {
    env.emplace_back(def.formals[i], n.args[i].value);
  }

  Expansion out;
  creator_ = node;
  if (auto v = fold_const(def.body, env)) {
    out.direct = *v;
  } else {
    out.root = build_node(def.body, env, n.parent, out.ready, out.created);
  }
  creator_ = kNoNode;
  return out;
}

Expansion GraphBuilder::expand_cond(NodeId node, Value test_value) {
  GraphNode& n = graph_->node(node);
  assert(n.op.kind == NodeOp::Kind::Cond);
  assert(n.pending == 0);

  Value clauses = n.op.payload;
  std::shared_ptr<const Env> env = n.op.env;
  Parent parent = n.parent;

  Expansion out;
  creator_ = node;
  if (!test_value.is_nil()) {
    Value consequent = mem_->car(mem_->cdr(mem_->car(clauses)));
    if (auto v = fold_const(consequent, *env)) {
      out.direct = *v;
    } else {
      out.root = build_node(consequent, *env, parent, out.ready, out.created);
    }
  } else {
    Value rest = mem_->cdr(clauses);
    if (rest.is_nil()) {
      out.direct = Value::nil();
    } else {
      out.root = build_cond(rest, env, parent, out.ready, out.created);
    }
  }
  creator_ = kNoNode;
  return out;
}

}  // namespace ahr
