#include "cy4/algebra/cy_expr.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "cy4/errors.hpp"

namespace cy4 {

struct CyExpr::Node {
  enum class Kind { number, symbol, add, sub, mul, div, neg, pow } kind;
  Rational value;
  Symbol symbol = Symbol::m;
  int exponent = 0;
  std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using NodePtr = std::shared_ptr<const CyExpr::Node>;
using Kind = CyExpr::Node::Kind;

NodePtr make(Kind k, std::vector<NodePtr> kids) {
  auto n = std::make_shared<CyExpr::Node>();
  n->kind = k;
  n->kids = std::move(kids);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = make(Kind::add, {lhs, term()});
      } else if (accept('-')) {
        lhs = make(Kind::sub, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = make(Kind::mul, {lhs, unary()});
      } else if (accept('/')) {
        lhs = make(Kind::div, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Kind::neg, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    bool paren = !negative && accept('(');
    if (paren) negative = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    auto n = std::make_shared<CyExpr::Node>();
    n->kind = Kind::pow;
    n->exponent = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (negative) n->exponent = -n->exponent;
    n->kids = {base};
    if (paren && !accept(')')) fail("expected ')'");
    return n;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      NodePtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto n = std::make_shared<CyExpr::Node>();
      n->kind = Kind::number;
      n->value = Rational(Integer(std::string(s_.substr(start, pos_ - start))));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto n = std::make_shared<CyExpr::Node>();
      n->kind = Kind::symbol;
      if (name == "l0") {
        n->symbol = Symbol::l0;
      } else if (name == "l1") {
        n->symbol = Symbol::l1;
      } else if (name == "l2") {
        n->symbol = Symbol::l2;
      } else if (name == "l3") {
        n->symbol = Symbol::l3;
      } else if (name == "m") {
        n->symbol = Symbol::m;
      } else {
        pos_ = start;
        fail("unknown symbol '" + std::string(name) + "'");
      }
      return n;
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Rational eval_node(const CyExpr::Node& n, const SymbolPoint& point) {
  switch (n.kind) {
    case Kind::number:
      return n.value;
    case Kind::symbol: {
      auto it = point.find(n.symbol);
      if (it == point.end()) throw InvalidInput("expression symbol has no assigned value");
      return it->second;
    }
    case Kind::add:
      return eval_node(*n.kids[0], point) + eval_node(*n.kids[1], point);
    case Kind::sub:
      return eval_node(*n.kids[0], point) - eval_node(*n.kids[1], point);
    case Kind::mul:
      return eval_node(*n.kids[0], point) * eval_node(*n.kids[1], point);
    case Kind::div: {
      Rational d = eval_node(*n.kids[1], point);
      if (d == 0) throw PoleAtPoint("division by zero while evaluating expression");
      return eval_node(*n.kids[0], point) / d;
    }
    case Kind::neg:
      return -eval_node(*n.kids[0], point);
    case Kind::pow: {
      Rational base = eval_node(*n.kids[0], point);
      if (n.exponent < 0 && base == 0) throw PoleAtPoint("negative power of zero");
      Rational r = 1;
      for (int i = 0; i < std::abs(n.exponent); ++i) r *= base;
      return n.exponent < 0 ? Rational(1 / r) : r;
    }
  }
  return 0;
}

RatFn reduce_node(const CyExpr::Node& n) {
  switch (n.kind) {
    case Kind::number:
      return RatFn(n.value);
    case Kind::symbol:
      switch (n.symbol) {
        case Symbol::l0:
          return lambda0();
        case Symbol::l1:
          return RatFn::variable(Var::l1);
        case Symbol::l2:
          return RatFn::variable(Var::l2);
        case Symbol::l3:
          return RatFn::variable(Var::l3);
        case Symbol::m:
          return RatFn::variable(Var::m);
      }
      break;
    case Kind::add:
      return reduce_node(*n.kids[0]) + reduce_node(*n.kids[1]);
    case Kind::sub:
      return reduce_node(*n.kids[0]) - reduce_node(*n.kids[1]);
    case Kind::mul:
      return reduce_node(*n.kids[0]) * reduce_node(*n.kids[1]);
    case Kind::div:
      return reduce_node(*n.kids[0]) / reduce_node(*n.kids[1]);
    case Kind::neg:
      return -reduce_node(*n.kids[0]);
    case Kind::pow:
      return pow(reduce_node(*n.kids[0]), n.exponent);
  }
  return {};
}

bool mentions_node(const CyExpr::Node& n, Symbol s) {
  if (n.kind == Kind::symbol) return n.symbol == s;
  for (const auto& k : n.kids) {
    if (mentions_node(*k, s)) return true;
  }
  return false;
}

}  // namespace

CyExpr CyExpr::parse(std::string_view text) { return CyExpr(Parser(text).parse_all()); }

Rational CyExpr::evaluate(const SymbolPoint& point) const { return eval_node(*root_, point); }

bool CyExpr::mentions(Symbol s) const { return mentions_node(*root_, s); }

RatFn reduce_cy_relation(const CyExpr& e) { return reduce_node(*e.root_); }

}  // namespace cy4
