#pragma once

#include <string>
#include <utility>

#include "cy4/algebra/mpoly.hpp"

namespace cy4 {

// Rational function num/den in (m, l1, l2, l3).
//
// Canonical form: gcd(num, den) = 1 as polynomials, both sides have integer
// coefficients whose combined content is 1, and the grlex-leading coefficient
// of den is positive. Two RatFn values are equal iff they are structurally
// equal.
class RatFn {
 public:
  RatFn() : den_(1) {}
  RatFn(const Rational& c) : num_(c), den_(1) { normalize_content(); }  // NOLINT
  RatFn(long c) : RatFn(Rational(c)) {}                                 // NOLINT
  RatFn(const MPoly& p) : num_(p), den_(1) { normalize_content(); }     // NOLINT

  // General constructor: removes the polynomial gcd. Throws DivisionByZero.
  static RatFn make(const MPoly& num, const MPoly& den);
  // Caller guarantees gcd(num, den) = 1; only the scalar normalization runs.
  static RatFn from_coprime(MPoly num, MPoly den);
  static RatFn variable(Var v) { return RatFn(MPoly::variable(v)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  // Requires is_constant().
  Rational constant_value() const;

  RatFn operator-() const;
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  friend bool operator==(const RatFn& a, const RatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  RatFn inverse() const;

  // Throws PoleAtPoint when the denominator vanishes at the point.
  Rational eval(const Assignment& point) const;
  // Partial specialization of one variable. Throws PoleAtPoint if the
  // denominator becomes identically zero.
  RatFn substitute(Var v, const Rational& value) const;
  RatFn substitute(Var v, const RatFn& value) const;

 private:
  RatFn(MPoly num, MPoly den, int /*tag*/) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_content();

  MPoly num_;
  MPoly den_;
};

RatFn pow(const RatFn& f, int e);

// x(x-1)...(x-k+1)/k!.
RatFn binomial(const RatFn& x, unsigned long k);

// lambda_0 as an element of the quotient ring: -(l1 + l2 + l3).
RatFn lambda0();

// "(m^2 + m*l3) / (2*l3^2)", "m/l3", "-1/2".
std::string to_string(const RatFn& f);

}  // namespace cy4
