#include "ahr/cost_model.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "ahr/errors.hpp"

namespace ahr {

Cycle CostModel::primitive_cost(PrimId id, size_t arity) const {
  switch (id) {
    case PrimId::Car: return car;
    case PrimId::Cdr: return cdr;
    case PrimId::Cons: return cons;
    case PrimId::Atom: return atom;
    case PrimId::Null: return null;
    case PrimId::Eq: return eq;
    case PrimId::List: return list_base + list_per_arg * static_cast<Cycle>(arity);
    case PrimId::Add: return add;
    case PrimId::Sub: return sub;
    case PrimId::Mul: return mul;
    case PrimId::Div: return div;
    case PrimId::Lt: return lt;
    case PrimId::Gt: return gt;
    case PrimId::NumEq: return num_eq;
  }
  return 0;
}

namespace {

std::string fold_lower(std::string_view s) {
  std::string out;
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

Cycle* slot_for(CostModel& cm, const std::string& key) {
  if (key == "car") return &cm.car;
  if (key == "cdr") return &cm.cdr;
  if (key == "cons") return &cm.cons;
  if (key == "atom") return &cm.atom;
  if (key == "null") return &cm.null;
  if (key == "eq") return &cm.eq;
  if (key == "+") return &cm.add;
  if (key == "-") return &cm.sub;
  if (key == "*") return &cm.mul;
  if (key == "/") return &cm.div;
  if (key == "<") return &cm.lt;
  if (key == ">") return &cm.gt;
  if (key == "=") return &cm.num_eq;
  if (key == "list_base") return &cm.list_base;
  if (key == "list_per_arg") return &cm.list_per_arg;
  if (key == "const") return &cm.constant;
  if (key == "dispatch_transfer") return &cm.dispatch_transfer;
  if (key == "result_transfer") return &cm.result_transfer;
  if (key == "expand_per_node") return &cm.expand_per_node;
  if (key == "abort_broadcast") return &cm.abort_broadcast;
  return nullptr;
}

}  // namespace

CostModel CostModel::parse(std::string_view text) {
  CostModel cm;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key, value, extra;
    if (!(fields >> key)) continue;  // blank line
    if (!(fields >> value) || (fields >> extra))
      throw ParseError(ParseError::Kind::Form,
                       "cost model line " + std::to_string(lineno) +
                           ": expected 'name value'");
    Cycle* slot = slot_for(cm, fold_lower(key));
    if (!slot)
      throw ParseError(ParseError::Kind::Form,
                       "cost model line " + std::to_string(lineno) +
                           ": unknown key '" + key + "'");
    int64_t parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size() || parsed < 0)
      throw ParseError(ParseError::Kind::Form,
                       "cost model line " + std::to_string(lineno) +
                           ": '" + value + "' is not a non-negative integer");
    *slot = static_cast<Cycle>(parsed);
  }
  return cm;
}

CostModel CostModel::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(ParseError::Kind::Form, "cannot open cost model file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace ahr
