#include "doctest.h"

#include "ahr/interp.hpp"
#include "corpus.hpp"

using namespace ahr;

namespace {

std::string eval_text(const std::string& source) {
  InterpRun r = run_interpreter(source);
  REQUIRE(r.value_text.has_value());
  return *r.value_text;
}

ErrorKind eval_error(const std::string& source, size_t cells = kDefaultCellCapacity,
                     size_t max_depth = 10000) {
  InterpRun r = run_interpreter(source, cells, max_depth);
  REQUIRE(r.error.has_value());
  return *r.error;
}

}  // namespace

TEST_CASE("hand-checked program values") {
  CHECK(eval_text("42") == "42");
  CHECK(eval_text("(QUOTE (A B C))") == "(A B C)");
  CHECK(eval_text("(+ (* 3 4) (- 10 4))") == "18");
  CHECK(eval_text("(/ (* 7 6) (- 9 5))") == "10");
  CHECK(eval_text("(CONS 1 2)") == "(1 . 2)");
  CHECK(eval_text("(+ 2147483647 1)") == "-2147483648");
  CHECK(eval_text("(COND ((< 2 1) 1) ((= 1 2) 2) (T 3))") == "3");
  CHECK(eval_text("(COND ((> 1 2) 1))") == "NIL");
  CHECK(eval_text(corpus::load("fact.lisp")) == "120");
  CHECK(eval_text(corpus::load("fact10.lisp")) == "3628800");
  CHECK(eval_text(corpus::load("fib.lisp")) == "55");
  CHECK(eval_text(corpus::load("gcd.lisp")) == "12");
  CHECK(eval_text(corpus::load("append.lisp")) == "(1 2 3 4 5 6)");
  CHECK(eval_text(corpus::load("reverse.lisp")) == "(5 4 3 2 1)");
  CHECK(eval_text(corpus::load("zip.lisp")) == "((1 A) (2 B) (3 C))");
  CHECK(eval_text(corpus::load("tree_sum.lisp")) == "21");
  CHECK(eval_text(corpus::load("member.lisp")) == "((3 4) NIL)");
  CHECK(eval_text(corpus::load("compare.lisp")) == "(T NIL T)");
  CHECK(eval_text(corpus::load("atoms.lisp")) == "(T NIL T NIL T NIL)");
  CHECK(eval_text(corpus::load("pow.lisp")) == "65536");
  CHECK(eval_text(corpus::load("nth.lisp")) == "C");
  CHECK(eval_text(corpus::load("minmax.lisp")) == "(9 3)");
  CHECK(eval_text(corpus::load("deep_cond.lisp")) == "(30 0)");
  CHECK(eval_text(corpus::load("map_double.lisp")) == "(2 4 6 8)");
  CHECK(eval_text(corpus::load("length.lisp")) == "5");
  CHECK(eval_text(corpus::load("sumlist.lisp")) == "55");
  CHECK(eval_text(corpus::load("fanout8.lisp")) == "(2 4 6 8 10 12 14 16)");
}

TEST_CASE("COND evaluates lazily") {
  CHECK(eval_text("(COND (T 1) (T (/ 1 0)))") == "1");
  CHECK(eval_text("(COND ((= 1 2) (CAR 5)) (T 7))") == "7");
}

TEST_CASE("runtime errors carry their kind") {
  CHECK(eval_error("(/ 1 0)") == ErrorKind::DivByZero);
  CHECK(eval_error("(CAR 5)") == ErrorKind::CarOfAtom);
  CHECK(eval_error("(CDR (QUOTE A))") == ErrorKind::CdrOfAtom);
  CHECK(eval_error("(+ 1 (QUOTE A))") == ErrorKind::TypeError);
  CHECK(eval_error("(DEFUN F (X) (+ X Y)) (F 1)") == ErrorKind::UnboundSymbol);
  CHECK(eval_error(corpus::load("err_conscap.lisp"), 128) == ErrorKind::PassiveMemoryFull);
  CHECK(eval_error(corpus::load("err_expansion.lisp")) == ErrorKind::ExpansionLimit);
}

TEST_CASE("the recursion depth cap is configurable") {
  // factorial of 30 needs 31 nested applications
  std::string deep =
      "(DEFUN COUNT (N) (COND ((= N 0) 0) (T (COUNT (- N 1))))) (COUNT 30)";
  CHECK(eval_error(deep, kDefaultCellCapacity, 10) == ErrorKind::ExpansionLimit);
  InterpRun ok = run_interpreter(deep, kDefaultCellCapacity, 100);
  CHECK(ok.value_text == "0");
}
