#pragma once

#include <map>
#include <utility>

#include "cy4/algebra/ratfn.hpp"

namespace cy4 {

inline constexpr int kDefaultQOrder = 20;
inline constexpr int kDefaultYOrder = 12;

// Power series in q and y truncated after q^q_order and y^y_order.
class Series2 {
 public:
  using Key = std::pair<int, int>;  // (power of q, power of y)

  Series2(int q_order, int y_order);
  static Series2 one(int q_order, int y_order);
  static Series2 monomial(int i, int j, const RatFn& c, int q_order, int y_order);

  int q_order() const { return q_order_; }
  int y_order() const { return y_order_; }
  const std::map<Key, RatFn>& coeffs() const { return coeffs_; }
  RatFn coeff(int i, int j) const;
  RatFn constant_term() const { return coeff(0, 0); }

  // Adds c q^i y^j; terms beyond the truncation are dropped.
  void add_term(int i, int j, const RatFn& c);

  Series2& operator+=(const Series2& o);
  Series2& operator-=(const Series2& o);
  friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
  friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }
  friend Series2 operator*(const Series2& a, const Series2& b);
  friend Series2 operator*(Series2 a, const RatFn& c);
  friend bool operator==(const Series2&, const Series2&) = default;

  // q -> -q.
  Series2 q_negated() const;
  Series2 truncated(int q_order, int y_order) const;

 private:
  void require_same_order(const Series2& o) const;

  int q_order_;
  int y_order_;
  std::map<Key, RatFn> coeffs_;
};

// a^e; negative e needs an invertible constant term (NonUnitConstantTerm).
Series2 int_pow(const Series2& a, long e);

// (1 - c q^a y^b)^x = sum_j binom(x, j) (-c)^j q^{aj} y^{bj}, for (a, b) != (0, 0).
Series2 binomial_factor(const RatFn& c, int a, int b, const RatFn& x, int q_order, int y_order);

// (1 - y)^x = sum_d (-1)^d binom(x, d) y^d.
Series2 binom_series(const RatFn& x, int y_order, int q_order = 0);

}  // namespace cy4
