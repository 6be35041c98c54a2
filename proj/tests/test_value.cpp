#include "doctest.h"

#include "ahr/errors.hpp"
#include "ahr/value.hpp"

using namespace ahr;

TEST_CASE("values carry their tag and payload") {
  CHECK(Value::nil().is_nil());
  CHECK(Value::integer(-7).is_int());
  CHECK(Value::integer(-7).int_value() == -7);
  CHECK(Value::symbol(3).is_symbol());
  CHECK(Value::symbol(3).symbol_id() == 3);
  CHECK(Value::pair(9).is_pair());
  CHECK(Value::pair(9).pair_index() == 9);
}

TEST_CASE("operator== is identity, not structure") {
  PassiveMemory mem(64);
  Value a = mem.cons(Value::integer(1), Value::nil());
  Value b = mem.cons(Value::integer(1), Value::nil());
  CHECK(a == a);
  CHECK(a != b);
  CHECK(mem.equal(a, b));
  CHECK(Value::integer(5) == Value::integer(5));
  CHECK(Value::integer(5) != Value::integer(6));
  CHECK(Value::nil() == Value::nil());
  CHECK(Value::symbol(2) == Value::symbol(2));
  CHECK(Value::symbol(2) != Value::integer(2));
}

TEST_CASE("symbol interning folds case and pins the builtin ids") {
  PassiveMemory mem(16);
  CHECK(mem.intern("car") == sym::CAR);
  CHECK(mem.intern("CAR") == sym::CAR);
  CHECK(mem.intern("t") == sym::T);
  CHECK(mem.intern("+") == sym::ADD);
  CHECK(mem.intern("=") == sym::NUM_EQ);
  int32_t foo = mem.intern("FOO");
  CHECK(foo > sym::NUM_EQ);
  CHECK(mem.intern("foo") == foo);
  CHECK(mem.symbol_name(foo) == "FOO");
}

TEST_CASE("symbol names reject unusable characters") {
  PassiveMemory mem(16);
  CHECK_THROWS_AS(mem.intern(""), LexError);
  CHECK_THROWS_AS(mem.intern("BAD NAME"), LexError);
  CHECK_THROWS_AS(mem.intern("HAS(PAREN"), LexError);
}

TEST_CASE("cell pool allocates until capacity, then faults") {
  PassiveMemory mem(2);
  Value a = mem.cons(Value::integer(1), Value::nil());
  Value b = mem.cons(Value::integer(2), a);
  CHECK(mem.cell_count() == 2);
  CHECK(mem.car(b) == Value::integer(2));
  CHECK(mem.cdr(b) == a);
  CHECK(!mem.try_cons(Value::nil(), Value::nil()).has_value());
  try {
    mem.cons(Value::nil(), Value::nil());
    FAIL("cons past capacity must throw");
  } catch (const AbortError& e) {
    CHECK(e.kind == ErrorKind::PassiveMemoryFull);
  }
}

TEST_CASE("printing is canonical") {
  PassiveMemory mem(64);
  CHECK(mem.print(Value::nil()) == "NIL");
  CHECK(mem.print(Value::integer(-42)) == "-42");
  CHECK(mem.print(Value::symbol(sym::T)) == "T");
  Value lst = mem.list_from({Value::integer(1), Value::integer(2), Value::integer(3)});
  CHECK(mem.print(lst) == "(1 2 3)");
  Value dotted = mem.cons(Value::integer(1), Value::integer(2));
  CHECK(mem.print(dotted) == "(1 . 2)");
  Value nested = mem.list_from({lst, dotted, Value::nil()});
  CHECK(mem.print(nested) == "((1 2 3) (1 . 2) NIL)");
}

TEST_CASE("list helpers report spine shape") {
  PassiveMemory mem(64);
  Value proper = mem.list_from({Value::integer(1), Value::integer(2)});
  CHECK(mem.list_length(proper) == 2);
  CHECK(mem.list_length(Value::nil()) == 0);
  Value improper = mem.cons(Value::integer(1), Value::integer(2));
  CHECK(!mem.list_length(improper).has_value());
  CHECK(!mem.list_length(Value::integer(5)).has_value());
}

TEST_CASE("machine arithmetic wraps at 32 bits") {
  CHECK(wrap_i32(5) == 5);
  CHECK(wrap_i32(-5) == -5);
  CHECK(wrap_i32(int64_t{2147483647} + 1) == -2147483648);
  CHECK(wrap_i32(int64_t{-2147483648} - 1) == 2147483647);
  CHECK(wrap_i32(int64_t{2147483647} * 2) == -2);
}
