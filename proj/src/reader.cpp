#include "ahr/reader.hpp"

#include <cctype>
#include <cstdint>

namespace ahr {

namespace {

bool is_delim(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
         c == '.' || c == ';';
}

bool ci_equal_nil(std::string_view token) {
  if (token.size() != 3) return false;
  auto up = [](char c) { return std::toupper(static_cast<unsigned char>(c)); };
  return up(token[0]) == 'N' && up(token[1]) == 'I' && up(token[2]) == 'L';
}

}  // namespace

void Reader::skip_blank() {
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos_;
    } else if (c == ';') {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
    } else {
      break;
    }
  }
}

bool Reader::at_end() {
  skip_blank();
  return pos_ >= text_.size();
}

std::string_view Reader::next_token() {
  skip_blank();
  if (pos_ >= text_.size())
    throw ParseError(ParseError::Kind::Unbalanced, "unexpected end of input");
  char c = text_[pos_];
  if (c == '(' || c == ')' || c == '.') {
    ++pos_;
    return text_.substr(pos_ - 1, 1);
  }
  size_t start = pos_;
  while (pos_ < text_.size() && !is_delim(text_[pos_])) ++pos_;
  return text_.substr(start, pos_ - start);
}

Value Reader::atom_from_token(std::string_view token) {
  // Integer token: optional sign, then digits only.
  size_t i = (token[0] == '+' || token[0] == '-') ? 1 : 0;
  bool numeric = i < token.size();
  for (size_t k = i; k < token.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(token[k]))) numeric = false;
  if (numeric) {
    int64_t magnitude = 0;
    for (size_t k = i; k < token.size(); ++k) {
      magnitude = magnitude * 10 + (token[k] - '0');
      if (magnitude > (int64_t{1} << 31))
        throw ParseError(ParseError::Kind::IntRange,
                         "integer out of 32-bit range: " + std::string(token));
    }
    int64_t value = (token[0] == '-') ? -magnitude : magnitude;
    if (value < INT32_MIN || value > INT32_MAX)
      throw ParseError(ParseError::Kind::IntRange,
                       "integer out of 32-bit range: " + std::string(token));
    return Value::integer(static_cast<int32_t>(value));
  }
  if (ci_equal_nil(token)) return Value::nil();
  return Value::symbol(memory_->intern(token));
}

Value Reader::read_expr() {
  std::string_view token = next_token();
  if (token == "(") return read_list_tail();
  if (token == ")")
    throw ParseError(ParseError::Kind::Unbalanced, "unmatched ')'");
  if (token == ".") throw ParseError(ParseError::Kind::Dot, "stray '.'");
  return atom_from_token(token);
}

Value Reader::read_list_tail() {
  std::vector<Value> items;
  Value tail = Value::nil();
  for (;;) {
    skip_blank();
    if (pos_ >= text_.size())
      throw ParseError(ParseError::Kind::Unbalanced, "unterminated list");
    char c = text_[pos_];
    if (c == ')') {
      ++pos_;
      break;
    }
    if (c == '.') {
      ++pos_;
      if (items.empty())
        throw ParseError(ParseError::Kind::Dot, "'.' with no preceding element");
      skip_blank();
      if (pos_ < text_.size() && (text_[pos_] == ')' || text_[pos_] == '.'))
        throw ParseError(ParseError::Kind::Dot, "'.' not followed by one expression");
      tail = read_expr();
      skip_blank();
      if (pos_ >= text_.size())
        throw ParseError(ParseError::Kind::Unbalanced, "unterminated list");
      if (text_[pos_] != ')')
        throw ParseError(ParseError::Kind::Dot, "more than one expression after '.'");
      ++pos_;
      break;
    }
    items.push_back(read_expr());
  }
  Value out = tail;
  for (auto it = items.rbegin(); it != items.rend(); ++it)
    out = memory_->cons(*it, out);
  return out;
}

Value Reader::read_one() {
  if (at_end())
    throw ParseError(ParseError::Kind::Form, "input holds no expression");
  return read_expr();
}

std::vector<Value> Reader::read_all() {
  std::vector<Value> forms;
  while (!at_end()) forms.push_back(read_expr());
  return forms;
}

Value read(std::string_view text, PassiveMemory& memory) {
  return Reader(text, memory).read_one();
}

}  // namespace ahr
