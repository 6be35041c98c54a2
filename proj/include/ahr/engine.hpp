#pragma once

#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "ahr/cost_model.hpp"
#include "ahr/errors.hpp"
#include "ahr/graph.hpp"
#include "ahr/processor.hpp"
#include "ahr/program.hpp"
#include "ahr/scheduler.hpp"
#include "ahr/value.hpp"

namespace ahr {

struct Capacities {
  size_t cells = kDefaultCellCapacity;
  size_t nodes = kDefaultNodeCapacity;
  size_t fifo = 0;  // 0 = unbounded
  size_t max_expansions = 10000;
};

struct Metrics {
  Cycle makespan = 0;
  std::vector<Cycle> busy_cycles;  // per processor
  double utilization = 0.0;
  uint64_t nodes_executed = 0;
  uint64_t expansions = 0;
  size_t fifo_max_depth = 0;
  Cycle bus_busy_cycles = 0;
  Cycle total_work = 0;
  Cycle critical_path = 0;
};

struct TraceRecord {
  enum class Kind : uint8_t { Ready, Dispatch, ExecEnd, Result, Expand, Abort };
  Cycle cycle = 0;
  Kind kind = Kind::Ready;
  NodeId node = kNoNode;
  ProcId proc = kNoProc;

  bool operator==(const TraceRecord&) const = default;
};

const char* to_string(TraceRecord::Kind k);
std::string to_line(const TraceRecord& r);

struct RunReport {
  std::optional<Value> value;
  std::string value_text;  // printed form of value, empty on abort
  std::optional<ErrorKind> error;
  Cycle abort_cycle = 0;  // cycle the abort was raised, only if error
  Metrics metrics;
  std::vector<TraceRecord> trace;  // populated only when tracing

  bool aborted() const { return error.has_value(); }
};

// Discrete-event simulator of the machine: one shared graph memory, a ready
// FIFO, a distributor arbitrating the high speed bus, and P processors.
class Engine {
 public:
  Engine(const Program& program, PassiveMemory& mem, int processors,
         const CostModel& cm, const Capacities& caps, bool trace = false);

  // Advances past one event. Returns false once the run is over; stepping a
  // finished run throws StepOnFinishedRun.
  bool step();
  bool finished() const { return finished_; }
  void run();

  Cycle now() const { return now_; }
  const ActiveMemory& graph() const { return graph_; }
  RunReport report() const;

 private:
  enum class EventKind : uint8_t { DispatchEnd, ExecEnd, HandshakeEnd, AbortDone };
  struct Event {
    Cycle time;
    uint64_t seq;
    EventKind kind;
    NodeId node;
    ProcId proc;
  };
  struct EventLater {
    bool operator()(const Event& a, const Event& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.seq > b.seq;
    }
  };

  // What a processor will publish during its handshake.
  struct Pending {
    enum class Kind : uint8_t { None, Value, Expand, Error } kind = Kind::None;
    Value value;
    Expansion expansion;
    ErrorKind error = ErrorKind::TypeError;
  };

  void schedule(Cycle time, EventKind kind, NodeId node, ProcId proc);
  void trace(TraceRecord::Kind kind, NodeId node, ProcId proc);
  void enqueue_ready(NodeId id);
  void bus_pump();
  void deliver(NodeId from, Value v);
  void begin_execution(NodeId id, ProcId p);
  void on_dispatch_end(NodeId id, ProcId p);
  void on_exec_end(NodeId id, ProcId p);
  void on_handshake_end(ProcId p);
  void raise_abort(ErrorKind kind, NodeId node, ProcId proc);
  void finish_abort();
  void check_invariants() const;

  PassiveMemory& mem_;
  ActiveMemory graph_;
  GraphBuilder builder_;
  CostModel cm_;
  Capacities caps_;
  ReadyFifo fifo_;
  ProcessorPool pool_;
  std::vector<Pending> pending_;

  std::priority_queue<Event, std::vector<Event>, EventLater> events_;
  uint64_t next_seq_ = 0;
  Cycle now_ = 0;
  bool bus_busy_ = false;
  std::deque<ProcId> handshake_queue_;
  bool finished_ = false;

  std::optional<Value> value_;
  std::optional<ErrorKind> error_;
  Cycle abort_cycle_ = 0;

  uint64_t nodes_executed_ = 0;
  uint64_t expansions_ = 0;
  uint64_t expansions_started_ = 0;
  Cycle bus_busy_cycles_ = 0;
  Cycle total_work_ = 0;
  Cycle critical_path_ = 0;

  bool tracing_;
  std::vector<TraceRecord> trace_;
};

// Loads and runs a program end to end on a fresh machine.
RunReport run_program(std::string_view source, int processors, const CostModel& cm,
                      const Capacities& caps = {}, bool trace = false);

}  // namespace ahr
