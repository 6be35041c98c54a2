#pragma once

#include "ahr/cost_model.hpp"
#include "ahr/errors.hpp"
#include "ahr/graph.hpp"
#include "ahr/value.hpp"

namespace ahr {

// What a processor concluded after running one value-producing node.
struct ExecOutcome {
  enum class Kind { Result, Error };
  Kind kind = Kind::Result;
  Value value;
  ErrorKind error = ErrorKind::TypeError;

  static ExecOutcome ok(Value v) {
    ExecOutcome o;
    o.kind = Kind::Result;
    o.value = v;
    return o;
  }
  static ExecOutcome fail(ErrorKind e) {
    ExecOutcome o;
    o.kind = Kind::Error;
    o.error = e;
    return o;
  }
};

// Applies a Prim, Const or VarRef node whose slots are all filled.
// Apply and Cond nodes expand instead; passing one here is a logic error.
ExecOutcome execute(const GraphNode& node, PassiveMemory& mem);

// Cycles a processor spends on one node. `created` is the number of graph
// nodes an expansion produced and is ignored for value-producing nodes.
Cycle service_time(const GraphNode& node, const CostModel& cm, size_t created);

}  // namespace ahr
