#include "cy4/series.hpp"

#include <string>

#include "cy4/errors.hpp"

namespace cy4 {

Series2::Series2(int q_order, int y_order) : q_order_(q_order), y_order_(y_order) {
  if (q_order < 0 || y_order < 0) throw InvalidInput("truncation orders must be non-negative");
}

Series2 Series2::one(int q_order, int y_order) { return monomial(0, 0, RatFn(1), q_order, y_order); }

Series2 Series2::monomial(int i, int j, const RatFn& c, int q_order, int y_order) {
  Series2 s(q_order, y_order);
  s.add_term(i, j, c);
  return s;
}

RatFn Series2::coeff(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? RatFn(0) : it->second;
}

void Series2::add_term(int i, int j, const RatFn& c) {
  if (i < 0 || j < 0) throw InvalidInput("series exponents must be non-negative");
  if (i > q_order_ || j > y_order_ || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void Series2::require_same_order(const Series2& o) const {
  if (q_order_ != o.q_order_ || y_order_ != o.y_order_) {
    throw OrderMismatch("series truncated at (" + std::to_string(q_order_) + ", " + std::to_string(y_order_) +
                        ") and (" + std::to_string(o.q_order_) + ", " + std::to_string(o.y_order_) + ")");
  }
}

Series2& Series2::operator+=(const Series2& o) {
  require_same_order(o);
  for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, c);
  return *this;
}

Series2& Series2::operator-=(const Series2& o) {
  require_same_order(o);
  for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, -c);
  return *this;
}

Series2 operator*(const Series2& a, const Series2& b) {
  a.require_same_order(b);
  Series2 out(a.q_order_, a.y_order_);
  for (const auto& [ka, ca] : a.coeffs_) {
    for (const auto& [kb, cb] : b.coeffs_) {
      int i = ka.first + kb.first;
      int j = ka.second + kb.second;
      if (i <= out.q_order_ && j <= out.y_order_) out.add_term(i, j, ca * cb);
    }
  }
  return out;
}

Series2 operator*(Series2 a, const RatFn& c) {
  if (c.is_zero()) {
    a.coeffs_.clear();
    return a;
  }
  for (auto& [k, v] : a.coeffs_) v = v * c;
  return a;
}

Series2 Series2::q_negated() const {
  Series2 out = *this;
  for (auto& [k, v] : out.coeffs_) {
    if (k.first % 2 != 0) v = -v;
  }
  return out;
}

Series2 Series2::truncated(int q_order, int y_order) const {
  Series2 out(q_order, y_order);
  for (const auto& [k, c] : coeffs_) out.add_term(k.first, k.second, c);
  return out;
}

namespace {

// 1/a as 1/c0 * sum_j (-r)^j where a = c0 (1 + r); r is nilpotent after
// truncation, so q_order + y_order + 1 terms suffice.
Series2 inverse(const Series2& a) {
  RatFn c0 = a.constant_term();
  if (c0.is_zero()) throw NonUnitConstantTerm("series with zero constant term is not invertible");
  RatFn inv0 = c0.inverse();
  Series2 r = a * inv0 - Series2::one(a.q_order(), a.y_order());
  Series2 neg_r = r * RatFn(-1);
  Series2 sum = Series2::one(a.q_order(), a.y_order());
  Series2 power = sum;
  for (int j = 1; j <= a.q_order() + a.y_order(); ++j) {
    power = power * neg_r;
    if (power.coeffs().empty()) break;
    sum += power;
  }
  return sum * inv0;
}

}  // namespace

Series2 int_pow(const Series2& a, long e) {
  Series2 base = e < 0 ? inverse(a) : a;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Series2 out = Series2::one(a.q_order(), a.y_order());
  while (k > 0) {
    if (k & 1UL) out = out * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return out;
}

Series2 binomial_factor(const RatFn& c, int a, int b, const RatFn& x, int q_order, int y_order) {
  if (a < 0 || b < 0 || (a == 0 && b == 0)) throw InvalidInput("binomial factor needs a positive monomial");
  Series2 out(q_order, y_order);
  RatFn coeff(1);
  RatFn minus_c = -c;
  for (int j = 0; a * j <= q_order && b * j <= y_order; ++j) {
    if (j > 0) coeff = coeff * (x - RatFn(j - 1)) * RatFn(ratio(1, j)) * minus_c;
    if (coeff.is_zero()) break;
    out.add_term(a * j, b * j, coeff);
  }
  return out;
}

Series2 binom_series(const RatFn& x, int y_order, int q_order) {
  return binomial_factor(RatFn(1), 0, 1, x, q_order, y_order);
}

}  // namespace cy4
