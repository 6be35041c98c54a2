#pragma once

#include <cstdint>
#include <optional>

#include "ahr/value.hpp"

namespace ahr {

enum class PrimId : uint8_t {
  Car, Cdr, Cons, Atom, Null, Eq, List, Add, Sub, Mul, Div, Lt, Gt, NumEq,
};

inline constexpr int kVariadic = -1;

struct PrimInfo {
  PrimId id;
  int arity;  // kVariadic for LIST
};

// Primitive lookup keyed by the pre-interned symbol ids.
std::optional<PrimInfo> lookup_primitive(int32_t symbol_id);
int32_t primitive_symbol(PrimId id);
const char* primitive_name(PrimId id);

}  // namespace ahr
