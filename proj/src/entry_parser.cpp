#include "ptdiag/entry_parser.hpp"

#include <cctype>
#include <vector>

#include "ptdiag/errors.hpp"

namespace ptdiag {

struct EntryExpr::Node {
  enum class Kind { number, imaginary_unit, eps, negate, add, subtract, multiply, power };

  Kind kind;
  BigRational value;
  unsigned exponent = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = EntryExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_leaf(Node::Kind kind, BigRational value = {}) {
  return std::make_shared<const Node>(Node{kind, std::move(value), 0, nullptr, nullptr});
}

NodePtr make_node(Node::Kind kind, NodePtr lhs, NodePtr rhs = nullptr, unsigned exponent = 0) {
  return std::make_shared<const Node>(Node{kind, {}, exponent, std::move(lhs), std::move(rhs)});
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("'+', '-', '*' or end of input", "unexpected character");
    return e;
  }

 private:
  NodePtr expr() {
    NodePtr lhs = term();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        lhs = make_node(Node::Kind::add, lhs, term());
      } else if (peek() == '-') {
        ++pos_;
        lhs = make_node(Node::Kind::subtract, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') return lhs;
      ++pos_;
      lhs = make_node(Node::Kind::multiply, lhs, factor());
    }
  }

  NodePtr factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return make_node(Node::Kind::negate, factor());
    }
    NodePtr base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    if (peek() == '-') fail("non-negative integer exponent", "negative exponent");
    const std::size_t start = pos_;
    const std::string digits = read_digits();
    if (digits.empty()) fail("non-negative integer exponent", "missing exponent");
    if (peek() == '.' || peek() == '/') fail("non-negative integer exponent", "non-integer exponent");
    if (digits.size() > 4) fail_at(start, "exponent below 10000", "exponent too large");
    return make_node(Node::Kind::power, base, nullptr, static_cast<unsigned>(std::stoul(digits)));
  }

  NodePtr atom() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      skip_ws();
      if (peek() != ')') fail("')'", "unbalanced parenthesis");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::string ident;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ident += src_[pos_++];
      if (ident == "i") return make_leaf(Node::Kind::imaginary_unit);
      if (ident == "eps") return make_leaf(Node::Kind::eps);
      fail_at(start, "atom ('i', 'eps', a number or '(')", "unknown identifier '" + ident + "'");
    }
    fail("atom", "syntax error");
  }

  NodePtr rational() {
    const std::string num = read_digits();
    skip_ws();
    if (peek() != '/') return make_leaf(Node::Kind::number, BigRational(BigInt(num)));
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    const std::string den = read_digits();
    if (den.empty()) fail("unsigned integer denominator", "division is only allowed inside a rational literal");
    const BigInt d(den);
    if (d == 0) fail_at(start, "nonzero denominator", "zero denominator");
    return make_leaf(Node::Kind::number, BigRational(BigInt(num), d));
  }

  std::string read_digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += src_[pos_++];
    return out;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& expected, const std::string& message) const {
    fail_at(pos_, expected, message);
  }
  [[noreturn]] void fail_at(std::size_t at, const std::string& expected, const std::string& message) const {
    throw ParseError(at, expected, message);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

EpsPoly eval(const Node& n) {
  switch (n.kind) {
    case Node::Kind::number:
      return EpsPoly(GaussianRational(n.value));
    case Node::Kind::imaginary_unit:
      return EpsPoly(GaussianRational::i());
    case Node::Kind::eps:
      return EpsPoly::variable();
    case Node::Kind::negate:
      return -eval(*n.lhs);
    case Node::Kind::add:
      return eval(*n.lhs) + eval(*n.rhs);
    case Node::Kind::subtract:
      return eval(*n.lhs) - eval(*n.rhs);
    case Node::Kind::multiply:
      return eval(*n.lhs) * eval(*n.rhs);
    case Node::Kind::power:
      return pow(eval(*n.lhs), n.exponent);
  }
  throw InvariantViolation("unhandled entry expression node");
}

bool has_eps(const Node& n) {
  if (n.kind == Node::Kind::eps) return true;
  return (n.lhs && has_eps(*n.lhs)) || (n.rhs && has_eps(*n.rhs));
}

}  // namespace

EpsPoly EntryExpr::evaluate() const { return eval(*root_); }

bool EntryExpr::mentions_eps() const { return has_eps(*root_); }

EntryExpr parse_entry(std::string_view src) { return EntryExpr(Parser(src).parse()); }

EpsPoly parse_eps_poly(std::string_view src) { return parse_entry(src).evaluate(); }

}  // namespace ptdiag
