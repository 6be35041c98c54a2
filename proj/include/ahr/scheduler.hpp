#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "ahr/cost_model.hpp"
#include "ahr/graph.hpp"

namespace ahr {

// Hardware queue of ready node ids. A capacity of 0 means unbounded.
class ReadyFifo {
 public:
  explicit ReadyFifo(size_t capacity = 0) : capacity_(capacity) {}

  // throws AbortError(FifoOverflow) when the queue is full
  void push(NodeId id);
  NodeId pop();

  bool empty() const { return q_.empty(); }
  size_t size() const { return q_.size(); }
  size_t max_depth() const { return max_depth_; }

 private:
  std::deque<NodeId> q_;
  size_t capacity_;
  size_t max_depth_ = 0;
};

struct Processor {
  enum class State : uint8_t {
    Free,         // idle, ready to accept a node
    Loading,      // dispatch transfer in flight
    Executing,    // running a node
    AwaitingBus,  // finished, queued for the handshake
    Returning,    // handshake transfer in flight
  };
  State state = State::Free;
  NodeId current = kNoNode;
  Cycle busy_cycles = 0;
};

class ProcessorPool {
 public:
  explicit ProcessorPool(int count);

  int count() const { return static_cast<int>(procs_.size()); }
  Processor& at(ProcId p) { return procs_.at(static_cast<size_t>(p)); }
  const Processor& at(ProcId p) const { return procs_.at(static_cast<size_t>(p)); }
  size_t free_count() const;

 private:
  std::vector<Processor> procs_;
};

inline constexpr int kMinProcessors = 1;
inline constexpr int kMaxProcessors = 64;
inline constexpr int kDefaultProcessors = 5;

// Static-priority arbitration: of all free processors, the lowest id wins.
std::optional<ProcId> arbitrate(const ProcessorPool& pool);

}  // namespace ahr
