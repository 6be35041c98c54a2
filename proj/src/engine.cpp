#include "ahr/engine.hpp"

#include <cassert>
#include <utility>

namespace ahr {

const char* to_string(TraceRecord::Kind k) {
  switch (k) {
    case TraceRecord::Kind::Ready: return "READY";
    case TraceRecord::Kind::Dispatch: return "DISPATCH";
    case TraceRecord::Kind::ExecEnd: return "EXEC_END";
    case TraceRecord::Kind::Result: return "RESULT";
    case TraceRecord::Kind::Expand: return "EXPAND";
    case TraceRecord::Kind::Abort: return "ABORT";
  }
  return "?";
}

std::string to_line(const TraceRecord& r) {
  std::string line = std::to_string(r.cycle);
  line += '\t';
  line += to_string(r.kind);
  line += '\t';
  line += r.node == kNoNode ? std::string("-") : std::to_string(r.node);
  line += '\t';
  line += r.proc == kNoProc ? std::string("-") : std::to_string(r.proc);
  return line;
}

Engine::Engine(const Program& program, PassiveMemory& mem, int processors,
               const CostModel& cm, const Capacities& caps, bool trace)
    : mem_(mem),
      graph_(caps.nodes),
      builder_(graph_, mem, program.defs),
      cm_(cm),
      caps_(caps),
      fifo_(caps.fifo),
      pool_(processors),
      pending_(static_cast<size_t>(processors)),
      tracing_(trace) {
  try {
    BuildResult root = builder_.build_graph(program.main, Env{}, Parent::root());
    for (NodeId id : root.ready) enqueue_ready(id);
    bus_pump();
  } catch (const AbortError& e) {
    raise_abort(e.kind, kNoNode, kNoProc);
  }
}

void Engine::schedule(Cycle time, EventKind kind, NodeId node, ProcId proc) {
  events_.push(Event{time, next_seq_++, kind, node, proc});
}

void Engine::trace(TraceRecord::Kind kind, NodeId node, ProcId proc) {
  if (tracing_) trace_.push_back(TraceRecord{now_, kind, node, proc});
}

void Engine::enqueue_ready(NodeId id) {
  GraphNode& n = graph_.node(id);
  assert(n.state == NodeState::Waiting || n.state == NodeState::Ready);
  assert(n.pending == 0);
  n.state = NodeState::Enqueued;
  trace(TraceRecord::Kind::Ready, id, kNoProc);
  fifo_.push(id);
}

void Engine::bus_pump() {
  while (!bus_busy_) {
    if (!handshake_queue_.empty()) {
      ProcId p = handshake_queue_.front();
      handshake_queue_.pop_front();
      Processor& proc = pool_.at(p);
      assert(proc.state == Processor::State::AwaitingBus);
      proc.state = Processor::State::Returning;
      bus_busy_ = true;
      schedule(now_ + cm_.result_transfer, EventKind::HandshakeEnd, proc.current, p);
    } else if (!fifo_.empty()) {
      auto p = arbitrate(pool_);
      if (!p) break;
      NodeId id = fifo_.pop();
      GraphNode& n = graph_.node(id);
      assert(n.state == NodeState::Enqueued);
      n.state = NodeState::Dispatched;
      Processor& proc = pool_.at(*p);
      proc.state = Processor::State::Loading;
      proc.current = id;
      bus_busy_ = true;
      trace(TraceRecord::Kind::Dispatch, id, *p);
      schedule(now_ + cm_.dispatch_transfer, EventKind::DispatchEnd, id, *p);
    } else {
      break;
    }
  }
}

void Engine::deliver(NodeId from, Value v) {
  const Parent dest = graph_.node(from).parent;
  if (dest.is_root()) {
    value_ = v;
    return;
  }
  uint32_t left = graph_.fill_slot(dest.node, dest.slot, v, from);
  if (left == 0) enqueue_ready(dest.node);
}

void Engine::begin_execution(NodeId id, ProcId p) {
  graph_.node(id).state = NodeState::Executing;
  pool_.at(p).state = Processor::State::Executing;

  Pending& out = pending_[static_cast<size_t>(p)];
  size_t created = 0;
  const NodeOp::Kind op_kind = graph_.node(id).op.kind;
  if (op_kind == NodeOp::Kind::Apply || op_kind == NodeOp::Kind::Cond) {
    size_t before = graph_.size();
    try {
      if (expansions_started_ >= caps_.max_expansions) {
        throw AbortError(ErrorKind::ExpansionLimit);
      }
      expansions_started_ += 1;
      Expansion e = op_kind == NodeOp::Kind::Apply
                        ? builder_.expand_apply(id)
                        : builder_.expand_cond(id, graph_.node(id).args[0].value);
      created = e.created;
      out.kind = Pending::Kind::Expand;
      out.expansion = std::move(e);
    } catch (const AbortError& err) {
      created = graph_.size() - before;
      out.kind = Pending::Kind::Error;
      out.error = err.kind;
    }
  } else {
    ExecOutcome o = execute(graph_.node(id), mem_);
    if (o.kind == ExecOutcome::Kind::Result) {
      out.kind = Pending::Kind::Value;
      out.value = o.value;
    } else {
      out.kind = Pending::Kind::Error;
      out.error = o.error;
    }
  }

  // Fetched only after expansion: growing the node store invalidates
  // references into it.
  GraphNode& n = graph_.node(id);
  n.service = service_time(n, cm_, created);
  Cycle base = 0;
  for (NodeId f : n.filled_by) base = std::max(base, graph_.node(f).chain);
  if (n.creator != kNoNode) base = std::max(base, graph_.node(n.creator).chain);
  n.chain = base + n.service;
  critical_path_ = std::max(critical_path_, n.chain);

  schedule(now_ + n.service, EventKind::ExecEnd, id, p);
}

void Engine::on_dispatch_end(NodeId id, ProcId p) {
  bus_busy_ = false;
  bus_busy_cycles_ += cm_.dispatch_transfer;
  begin_execution(id, p);
  bus_pump();
}

void Engine::on_exec_end(NodeId id, ProcId p) {
  GraphNode& n = graph_.node(id);
  trace(TraceRecord::Kind::ExecEnd, id, p);
  n.executed = true;
  Processor& proc = pool_.at(p);
  proc.busy_cycles += n.service;
  total_work_ += n.service;

  const Pending& out = pending_[static_cast<size_t>(p)];
  if (out.kind == Pending::Kind::Error) {
    raise_abort(out.error, id, p);
    return;
  }
  proc.state = Processor::State::AwaitingBus;
  handshake_queue_.push_back(p);
  bus_pump();
}

void Engine::on_handshake_end(ProcId p) {
  bus_busy_ = false;
  bus_busy_cycles_ += cm_.result_transfer;

  Processor& proc = pool_.at(p);
  NodeId id = proc.current;
  GraphNode& n = graph_.node(id);
  Pending out = std::move(pending_[static_cast<size_t>(p)]);
  pending_[static_cast<size_t>(p)] = Pending{};
  proc.current = kNoNode;
  proc.state = Processor::State::Free;
  n.state = NodeState::Done;

  try {
    switch (out.kind) {
      case Pending::Kind::Value:
        trace(TraceRecord::Kind::Result, id, p);
        nodes_executed_ += 1;
        deliver(id, out.value);
        break;
      case Pending::Kind::Expand:
        trace(TraceRecord::Kind::Expand, id, p);
        expansions_ += 1;
        if (out.expansion.direct) {
          trace(TraceRecord::Kind::Result, id, p);
          deliver(id, *out.expansion.direct);
        } else {
          for (NodeId r : out.expansion.ready) enqueue_ready(r);
        }
        break;
      case Pending::Kind::None:
      case Pending::Kind::Error:
        throw std::logic_error("handshake without a publishable outcome");
    }
  } catch (const AbortError& e) {
    raise_abort(e.kind, id, p);
    return;
  }
  bus_pump();
}

void Engine::raise_abort(ErrorKind kind, NodeId node, ProcId proc) {
  error_ = kind;
  abort_cycle_ = now_;
  trace(TraceRecord::Kind::Abort, node, proc);
  events_ = {};
  handshake_queue_.clear();
  schedule(now_ + cm_.abort_broadcast, EventKind::AbortDone, kNoNode, kNoProc);
}

void Engine::finish_abort() {
  for (NodeId id = 0; id < graph_.size(); ++id) {
    GraphNode& n = graph_.node(id);
    if (n.state != NodeState::Done) n.state = NodeState::Aborted;
  }
  for (int p = 0; p < pool_.count(); ++p) {
    pool_.at(p).state = Processor::State::Free;
    pool_.at(p).current = kNoNode;
  }
  finished_ = true;
}

bool Engine::step() {
  if (finished_) throw StepOnFinishedRun();
  assert(!events_.empty());
  Event e = events_.top();
  events_.pop();
  assert(e.time >= now_);
  now_ = e.time;

  switch (e.kind) {
    case EventKind::DispatchEnd:
      on_dispatch_end(e.node, e.proc);
      break;
    case EventKind::ExecEnd:
      on_exec_end(e.node, e.proc);
      break;
    case EventKind::HandshakeEnd:
      on_handshake_end(e.proc);
      break;
    case EventKind::AbortDone:
      finish_abort();
      break;
  }

#ifndef NDEBUG
  check_invariants();
#endif

  if (!finished_ && events_.empty()) {
    assert(value_.has_value());
    finished_ = true;
  }
  return !finished_;
}

void Engine::run() {
  while (!finished_) step();
}

void Engine::check_invariants() const {
  // Work conservation: a ready node, a free processor and an idle bus must
  // never coexist at an event boundary.
  if (!error_ && !bus_busy_ && !fifo_.empty()) {
    assert(!arbitrate(pool_).has_value());
  }
  for (NodeId id = 0; id < graph_.size(); ++id) {
    const GraphNode& n = graph_.node(id);
    uint32_t unfilled = 0;
    for (const Slot& s : n.args) {
      if (!s.filled) ++unfilled;
    }
    assert(n.pending == unfilled);
    if (n.state != NodeState::Waiting && n.state != NodeState::Aborted) {
      assert(n.pending == 0);
    }
  }
}

RunReport Engine::report() const {
  RunReport r;
  r.value = value_;
  if (value_) r.value_text = mem_.print(*value_);
  r.error = error_;
  r.abort_cycle = abort_cycle_;

  Metrics& m = r.metrics;
  m.makespan = now_;
  m.busy_cycles.resize(static_cast<size_t>(pool_.count()));
  Cycle busy_total = 0;
  for (int p = 0; p < pool_.count(); ++p) {
    m.busy_cycles[static_cast<size_t>(p)] = pool_.at(p).busy_cycles;
    busy_total += pool_.at(p).busy_cycles;
  }
  m.utilization = m.makespan == 0
                      ? 0.0
                      : static_cast<double>(busy_total) /
                            (static_cast<double>(pool_.count()) *
                             static_cast<double>(m.makespan));
  m.nodes_executed = nodes_executed_;
  m.expansions = expansions_;
  m.fifo_max_depth = fifo_.max_depth();
  m.bus_busy_cycles = bus_busy_cycles_;
  m.total_work = total_work_;
  m.critical_path = critical_path_;

  if (tracing_) r.trace = trace_;
  return r;
}

RunReport run_program(std::string_view source, int processors, const CostModel& cm,
                      const Capacities& caps, bool trace) {
  PassiveMemory mem(caps.cells);
  Program program = load_program(source, mem);
  Engine engine(program, mem, processors, cm, caps, trace);
  engine.run();
  return engine.report();
}

}  // namespace ahr
