#pragma once

#include <cstdint>
#include <string_view>

#include "ahr/prims.hpp"

namespace ahr {

using Cycle = uint64_t;

// Cycle costs for every machine action. The defaults are calibration knobs,
// not measurements; experiments that depend on them should load an explicit
// profile file so they stay reproducible.
//
// File format: one `name value` pair per line, `#` comments, unknown keys
// rejected, all values >= 0. Keys: car cdr cons atom null eq + - * / < > =
// list_base list_per_arg const dispatch_transfer result_transfer
// expand_per_node abort_broadcast.
struct CostModel {
  Cycle car = 10, cdr = 10, cons = 10, atom = 10, null = 10, eq = 10;
  Cycle add = 12, sub = 12, mul = 12, div = 12, lt = 12, gt = 12, num_eq = 12;
  Cycle list_base = 10, list_per_arg = 4;
  Cycle constant = 10;  // Const / VarRef node fetch

  Cycle dispatch_transfer = 8;   // high-speed bus, node to processor
  Cycle result_transfer = 5;     // high-speed bus, combined handshake
  Cycle expand_per_node = 6;     // per node created while expanding
  Cycle abort_broadcast = 3;     // low-speed bus stop message

  static CostModel defaults() { return CostModel{}; }

  // Transfers and expansion free; primitive costs untouched.
  static CostModel zero_overhead() {
    CostModel cm;
    cm.dispatch_transfer = 0;
    cm.result_transfer = 0;
    cm.expand_per_node = 0;
    cm.abort_broadcast = 0;
    return cm;
  }

  // Zero-overhead plus every execution costing exactly one cycle.
  static CostModel unit_zero_overhead() {
    CostModel cm = zero_overhead();
    cm.car = cm.cdr = cm.cons = cm.atom = cm.null = cm.eq = 1;
    cm.add = cm.sub = cm.mul = cm.div = cm.lt = cm.gt = cm.num_eq = 1;
    cm.list_base = 1;
    cm.list_per_arg = 0;
    cm.constant = 1;
    return cm;
  }

  static CostModel parse(std::string_view text);      // throws ParseError(Form)
  static CostModel load_file(const std::string& path);

  Cycle primitive_cost(PrimId id, size_t arity) const;
};

}  // namespace ahr
