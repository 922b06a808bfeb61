#pragma once

#include <map>
#include <memory>
#include <string_view>

#include "cy4/algebra/ratfn.hpp"

namespace cy4 {

// Symbols of the unreduced ring Q(l0, l1, l2, l3, m).
enum class Symbol { l0, l1, l2, l3, m };

using SymbolPoint = std::map<Symbol, Rational>;

// Immutable expression tree over the unreduced symbols. Grammar:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' ['-'] integer)?
//   atom  := integer | l0 | l1 | l2 | l3 | m | '(' expr ')'
class CyExpr {
 public:
  static CyExpr parse(std::string_view text);  // throws ParseError

  // Throws PoleAtPoint on division by zero during evaluation.
  Rational evaluate(const SymbolPoint& point) const;
  bool mentions(Symbol s) const;

  struct Node;

 private:
  explicit CyExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
  friend RatFn reduce_cy_relation(const CyExpr& e);
};

// Replaces l0 by -(l1 + l2 + l3) and normalizes. Throws DivisionByZero when a
// denominator vanishes identically after the substitution.
RatFn reduce_cy_relation(const CyExpr& e);

inline RatFn parse_ratfn(std::string_view text) { return reduce_cy_relation(CyExpr::parse(text)); }

}  // namespace cy4
