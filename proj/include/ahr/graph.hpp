#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ahr/cost_model.hpp"
#include "ahr/program.hpp"
#include "ahr/value.hpp"

namespace ahr {

using NodeId = uint32_t;
inline constexpr NodeId kNoNode = UINT32_MAX;
using ProcId = int32_t;
inline constexpr ProcId kNoProc = -1;

enum class NodeState : uint8_t {
  Waiting, Ready, Enqueued, Dispatched, Executing, Done, Aborted,
};

const char* to_string(NodeState s);

// Argument slot of a dataflow node. Constants are filled at build time;
// the rest are filled by results flowing back through the distributor.
struct Slot {
  bool filled = false;
  Value value;
};

// Parent link: either the program root or (node, slot index).
struct Parent {
  NodeId node = kNoNode;
  uint32_t slot = 0;
  bool is_root() const { return node == kNoNode; }
  static Parent root() { return Parent{}; }
  static Parent at(NodeId n, uint32_t s) { return Parent{n, s}; }
};

// Bindings of one function's formals; captured by COND nodes so later
// clauses can still be built against them.
using Env = std::vector<std::pair<int32_t, Value>>;

struct NodeOp {
  enum class Kind : uint8_t { Prim, Apply, Cond, Const, VarRef };
  Kind kind = Kind::Const;
  PrimId prim{};                    // Prim
  int32_t symbol = -1;              // Apply / VarRef
  Value payload;                    // Const value; Cond remaining clauses
  std::shared_ptr<const Env> env;   // Cond only
};

struct GraphNode {
  NodeId id = kNoNode;
  NodeOp op;
  std::vector<Slot> args;
  uint32_t pending = 0;  // always equals the number of unfilled slots
  Parent parent;
  NodeState state = NodeState::Waiting;
  uint16_t program_id = 0;

  // Run bookkeeping used for metrics.
  NodeId creator = kNoNode;        // expansion node that built this one
  Cycle service = 0;               // cycles spent executing, set at dispatch
  Cycle chain = 0;                 // longest service-weighted dependency chain
  std::vector<NodeId> filled_by;   // nodes whose results landed in our slots
  bool executed = false;

  bool all_filled() const { return pending == 0; }
};

inline constexpr size_t kDefaultNodeCapacity = 8192;

// Shared RAM holding the dataflow graph. Nodes are only appended.
class ActiveMemory {
 public:
  explicit ActiveMemory(size_t node_capacity = kDefaultNodeCapacity)
      : capacity_(node_capacity) {}

  // throws AbortError(ActiveMemoryFull)
  NodeId alloc(NodeOp op, size_t argc, Parent parent, NodeId creator);

  GraphNode& node(NodeId id) { return nodes_.at(id); }
  const GraphNode& node(NodeId id) const { return nodes_.at(id); }

  // Fills a pending slot and decrements the ready counter.
  // throws std::logic_error if the slot was already filled.
  uint32_t fill_slot(NodeId id, uint32_t slot, Value v, NodeId from);

  size_t size() const { return nodes_.size(); }
  size_t capacity() const { return capacity_; }

  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }

 private:
  std::vector<GraphNode> nodes_;
  size_t capacity_;
};

// Result of compiling one expression into graph nodes. `ready` lists every
// created node whose counter is already zero, in left-to-right depth-first
// source order.
struct BuildResult {
  NodeId root = kNoNode;
  std::vector<NodeId> ready;
  size_t created = 0;
};

// Outcome of expanding an Apply or Cond node: either a freshly built
// subgraph spliced onto the expanded node's parent, or a direct value when
// the expansion bottomed out in a constant.
struct Expansion {
  std::optional<Value> direct;
  NodeId root = kNoNode;
  std::vector<NodeId> ready;
  size_t created = 0;
};

class GraphBuilder {
 public:
  GraphBuilder(ActiveMemory& graph, PassiveMemory& memory, const Definitions& defs)
      : graph_(&graph), mem_(&memory), defs_(&defs) {}

  // Compiles expr; constants become a Const node here (inside argument
  // positions they fold into filled slots instead).
  BuildResult build_graph(Value expr, const Env& env, Parent parent);

  // pre: node.op is Apply and every slot is filled.
  Expansion expand_apply(NodeId node);

  // pre: node.op is Cond and its test slot is filled with test_value.
  Expansion expand_cond(NodeId node, Value test_value);

 private:
  std::optional<Value> fold_const(Value expr, const Env& env) const;
  NodeId build_node(Value expr, const Env& env, Parent parent,
                    std::vector<NodeId>& ready, size_t& created);
  NodeId build_cond(Value clauses, std::shared_ptr<const Env> env, Parent parent,
                    std::vector<NodeId>& ready, size_t& created);

  ActiveMemory* graph_;
  PassiveMemory* mem_;
  const Definitions* defs_;
  NodeId creator_ = kNoNode;  // set while realizing an expansion
};

}  // namespace ahr
