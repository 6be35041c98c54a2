#include "ahr/scheduler.hpp"

#include <stdexcept>
#include <string>

#include "ahr/errors.hpp"

namespace ahr {

void ReadyFifo::push(NodeId id) {
  if (capacity_ != 0 && q_.size() >= capacity_) {
    throw AbortError(ErrorKind::FifoOverflow);
  }
  q_.push_back(id);
  if (q_.size() > max_depth_) max_depth_ = q_.size();
}

NodeId ReadyFifo::pop() {
  if (q_.empty()) throw std::logic_error("pop from empty ready queue");
  NodeId id = q_.front();
  q_.pop_front();
  return id;
}

ProcessorPool::ProcessorPool(int count) {
  if (count < kMinProcessors || count > kMaxProcessors) {
    throw std::invalid_argument("processor count must be between " +
                                std::to_string(kMinProcessors) + " and " +
                                std::to_string(kMaxProcessors));
  }
  procs_.resize(static_cast<size_t>(count));
}

size_t ProcessorPool::free_count() const {
  size_t n = 0;
  for (int p = 0; p < count(); ++p) {
    if (at(p).state == Processor::State::Free) ++n;
  }
  return n;
}

std::optional<ProcId> arbitrate(const ProcessorPool& pool) {
  for (int p = 0; p < pool.count(); ++p) {
    if (pool.at(p).state == Processor::State::Free) return p;
  }
  return std::nullopt;
}

}  // namespace ahr
