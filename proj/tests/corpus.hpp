#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ahr/engine.hpp"

// Registry of the shipped example programs. Every .lisp file under
// programs/ must appear here exactly once; a test enforces that so the
// corpus and the registry cannot drift apart.
namespace corpus {

struct Entry {
  const char* file;
  std::optional<ahr::ErrorKind> expected_error;
  ahr::Capacities caps;
};

inline const std::vector<Entry>& all() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> v;
    auto clean = [&](const char* f) { v.push_back(Entry{f, std::nullopt, {}}); };
    clean("append.lisp");
    clean("arith_basic.lisp");
    clean("arith_div.lisp");
    clean("arith_neg.lisp");
    clean("arith_tree.lisp");
    clean("atoms.lisp");
    clean("car_cdr.lisp");
    clean("compare.lisp");
    clean("compose.lisp");
    clean("cond_empty_default.lisp");
    clean("cond_fall.lisp");
    clean("cond_first.lisp");
    clean("cons_chain.lisp");
    clean("const42.lisp");
    clean("deep_cond.lisp");
    clean("dotted.lisp");
    clean("fact.lisp");
    clean("fact10.lisp");
    clean("fanout64.lisp");
    clean("fanout8.lisp");
    clean("fib.lisp");
    clean("gcd.lisp");
    clean("length.lisp");
    clean("list_mixed.lisp");
    clean("map_double.lisp");
    clean("member.lisp");
    clean("minmax.lisp");
    clean("nth.lisp");
    clean("pow.lisp");
    clean("quote_list.lisp");
    clean("reverse.lisp");
    clean("square.lisp");
    clean("sumlist.lisp");
    clean("tree_sum.lisp");
    clean("wrap_add.lisp");
    clean("zip.lisp");

    auto err = [&](const char* f, ahr::ErrorKind k, ahr::Capacities caps = {}) {
      v.push_back(Entry{f, k, caps});
    };
    err("err_car.lisp", ahr::ErrorKind::CarOfAtom);
    err("err_cdr.lisp", ahr::ErrorKind::CdrOfAtom);
    err("err_div.lisp", ahr::ErrorKind::DivByZero);
    err("err_type.lisp", ahr::ErrorKind::TypeError);
    err("err_unbound.lisp", ahr::ErrorKind::UnboundSymbol);
    ahr::Capacities tight_cells;
    tight_cells.cells = 128;
    err("err_conscap.lisp", ahr::ErrorKind::PassiveMemoryFull, tight_cells);
    ahr::Capacities roomy_nodes;
    roomy_nodes.nodes = 30000;
    err("err_expansion.lisp", ahr::ErrorKind::ExpansionLimit, roomy_nodes);
    return v;
  }();
  return entries;
}

inline std::string dir() { return AHR_PROGRAMS_DIR; }

inline std::string load(const std::string& name) {
  std::string path = dir() + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("corpus file missing: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<Entry> clean_entries() {
  std::vector<Entry> v;
  for (const Entry& e : all()) {
    if (!e.expected_error) v.push_back(e);
  }
  return v;
}

inline std::vector<Entry> error_entries() {
  std::vector<Entry> v;
  for (const Entry& e : all()) {
    if (e.expected_error) v.push_back(e);
  }
  return v;
}

inline std::set<std::string> files_on_disk() {
  std::set<std::string> names;
  for (const auto& p : std::filesystem::directory_iterator(dir())) {
    if (p.path().extension() == ".lisp") names.insert(p.path().filename().string());
  }
  return names;
}

}  // namespace corpus
