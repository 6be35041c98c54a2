#include "ahr/prims.hpp"

namespace ahr {

std::optional<PrimInfo> lookup_primitive(int32_t symbol_id) {
  switch (symbol_id) {
    case sym::CAR: return PrimInfo{PrimId::Car, 1};
    case sym::CDR: return PrimInfo{PrimId::Cdr, 1};
    case sym::CONS: return PrimInfo{PrimId::Cons, 2};
    case sym::ATOM: return PrimInfo{PrimId::Atom, 1};
    case sym::NULLP: return PrimInfo{PrimId::Null, 1};
    case sym::EQ: return PrimInfo{PrimId::Eq, 2};
    case sym::LIST: return PrimInfo{PrimId::List, kVariadic};
    case sym::ADD: return PrimInfo{PrimId::Add, 2};
    case sym::SUB: return PrimInfo{PrimId::Sub, 2};
    case sym::MUL: return PrimInfo{PrimId::Mul, 2};
    case sym::DIV: return PrimInfo{PrimId::Div, 2};
    case sym::LT: return PrimInfo{PrimId::Lt, 2};
    case sym::GT: return PrimInfo{PrimId::Gt, 2};
    case sym::NUM_EQ: return PrimInfo{PrimId::NumEq, 2};
    default: return std::nullopt;
  }
}

int32_t primitive_symbol(PrimId id) {
  switch (id) {
    case PrimId::Car: return sym::CAR;
    case PrimId::Cdr: return sym::CDR;
    case PrimId::Cons: return sym::CONS;
    case PrimId::Atom: return sym::ATOM;
    case PrimId::Null: return sym::NULLP;
    case PrimId::Eq: return sym::EQ;
    case PrimId::List: return sym::LIST;
    case PrimId::Add: return sym::ADD;
    case PrimId::Sub: return sym::SUB;
    case PrimId::Mul: return sym::MUL;
    case PrimId::Div: return sym::DIV;
    case PrimId::Lt: return sym::LT;
    case PrimId::Gt: return sym::GT;
    case PrimId::NumEq: return sym::NUM_EQ;
  }
  return -1;
}

const char* primitive_name(PrimId id) {
  switch (id) {
    case PrimId::Car: return "CAR";
    case PrimId::Cdr: return "CDR";
    case PrimId::Cons: return "CONS";
    case PrimId::Atom: return "ATOM";
    case PrimId::Null: return "NULL";
    case PrimId::Eq: return "EQ";
    case PrimId::List: return "LIST";
    case PrimId::Add: return "+";
    case PrimId::Sub: return "-";
    case PrimId::Mul: return "*";
    case PrimId::Div: return "/";
    case PrimId::Lt: return "<";
    case PrimId::Gt: return ">";
    case PrimId::NumEq: return "=";
  }
  return "?";
}

}  // namespace ahr
