#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ahr/errors.hpp"

namespace ahr {

enum class Tag : uint8_t { Nil, Int, Symbol, Pair };

// One LISP datum. Atoms are self-contained; a Pair holds an index into the
// cell pool of the PassiveMemory that created it. operator== is identity:
// exact on NIL, integers and interned symbols, reference identity on pairs.
class Value {
 public:
  constexpr Value() : tag_(Tag::Nil), payload_(0) {}

  static constexpr Value nil() { return Value(); }
  static constexpr Value integer(int32_t v) { return Value(Tag::Int, v); }
  static constexpr Value symbol(int32_t id) { return Value(Tag::Symbol, id); }
  static constexpr Value pair(int32_t index) { return Value(Tag::Pair, index); }

  constexpr Tag tag() const { return tag_; }
  constexpr bool is_nil() const { return tag_ == Tag::Nil; }
  constexpr bool is_int() const { return tag_ == Tag::Int; }
  constexpr bool is_symbol() const { return tag_ == Tag::Symbol; }
  constexpr bool is_pair() const { return tag_ == Tag::Pair; }

  constexpr int32_t int_value() const { return payload_; }
  constexpr int32_t symbol_id() const { return payload_; }
  constexpr int32_t pair_index() const { return payload_; }

  friend constexpr bool operator==(Value a, Value b) {
    return a.tag_ == b.tag_ && a.payload_ == b.payload_;
  }
  friend constexpr bool operator!=(Value a, Value b) { return !(a == b); }

 private:
  constexpr Value(Tag t, int32_t p) : tag_(t), payload_(p) {}
  Tag tag_;
  int32_t payload_;
};

// Immutable cons cell. Nothing ever rewrites head or tail after creation.
struct Cell {
  Value head;
  Value tail;
};

// Bijective name <-> id table. Names are case-folded to uppercase before
// lookup, so intern("car") and intern("CAR") agree.
class SymbolTable {
 public:
  int32_t intern(std::string_view name);
  const std::string& name(int32_t id) const;
  size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int32_t> ids_;
};

// Symbols interned by every PassiveMemory at construction, in this order,
// so their ids are stable constants.
namespace sym {
inline constexpr int32_t T = 0;
inline constexpr int32_t QUOTE = 1;
inline constexpr int32_t COND = 2;
inline constexpr int32_t DEFUN = 3;
inline constexpr int32_t CAR = 4;
inline constexpr int32_t CDR = 5;
inline constexpr int32_t CONS = 6;
inline constexpr int32_t ATOM = 7;
inline constexpr int32_t NULLP = 8;
inline constexpr int32_t EQ = 9;
inline constexpr int32_t LIST = 10;
inline constexpr int32_t ADD = 11;
inline constexpr int32_t SUB = 12;
inline constexpr int32_t MUL = 13;
inline constexpr int32_t DIV = 14;
inline constexpr int32_t LT = 15;
inline constexpr int32_t GT = 16;
inline constexpr int32_t NUM_EQ = 17;
}  // namespace sym

// 256KB of shared RAM at 8 bytes per cell.
inline constexpr size_t kDefaultCellCapacity = 32768;

// The shared store for atoms, lists and temporary results. Cells are only
// ever appended; allocation past capacity is a reported fault, never a
// silent wraparound.
class PassiveMemory {
 public:
  explicit PassiveMemory(size_t cell_capacity = kDefaultCellCapacity);

  // throws AbortError(PassiveMemoryFull) when the pool is exhausted
  Value cons(Value head, Value tail);
  std::optional<Value> try_cons(Value head, Value tail);

  const Cell& cell(Value pair) const;
  Value car(Value pair) const { return cell(pair).head; }
  Value cdr(Value pair) const { return cell(pair).tail; }

  int32_t intern(std::string_view name) { return symbols_.intern(name); }
  const std::string& symbol_name(int32_t id) const { return symbols_.name(id); }
  const SymbolTable& symbols() const { return symbols_; }

  size_t cell_count() const { return cells_.size(); }
  size_t capacity() const { return capacity_; }

  bool equal(Value a, Value b) const;  // structural equality
  std::string print(Value v) const;    // canonical text form

  // Proper-list helpers; nullopt when the spine is improper.
  std::optional<size_t> list_length(Value v) const;
  Value list_from(const std::vector<Value>& items);

 private:
  void print_rec(Value v, std::string& out) const;

  std::vector<Cell> cells_;
  size_t capacity_;
  SymbolTable symbols_;
};

// Machine word arithmetic: wrap to 32 bits, two's complement.
constexpr int32_t wrap_i32(int64_t v) { return static_cast<int32_t>(static_cast<uint64_t>(v)); }

}  // namespace ahr
