#pragma once

#include <array>
#include <map>
#include <span>
#include <string>

#include "cy4/algebra/ratfn.hpp"

namespace cy4 {

// Affine form with integer coefficients in (m, l1, l2, l3, 1).
struct LinearForm {
  // Indexed by Var, then the constant term at kConst.
  static constexpr std::size_t kConst = kNumVars;
  std::array<long, kNumVars + 1> coeffs{};

  // Form in lambda_0..lambda_3 and m, with lambda_0 eliminated.
  static LinearForm from_lambda(long c0, long c1, long c2, long c3, long cm = 0, long constant = 0);

  long& operator[](Var v) { return coeffs[static_cast<std::size_t>(v)]; }
  long operator[](Var v) const { return coeffs[static_cast<std::size_t>(v)]; }
  long constant() const { return coeffs[kConst]; }

  bool is_zero() const;
  // No variable occurs.
  bool is_constant() const;
  MPoly to_mpoly() const;

  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
};

std::string to_string(const LinearForm& f);

// scale * prod_f f^e with canonical, pairwise non-proportional forms. Because
// distinct canonical forms are coprime irreducibles, sums of such products can
// be brought to lowest terms by trial division alone.
class FactoredTerm {
 public:
  FactoredTerm() = default;
  explicit FactoredTerm(const Rational& scale) : scale_(scale) {}

  // Zero forms: a positive exponent makes the whole term zero, a negative one
  // throws DivisionByZero.
  FactoredTerm& multiply(const LinearForm& f, int exponent = 1);
  FactoredTerm& multiply(const Rational& c);
  FactoredTerm& multiply(const FactoredTerm& other);

  bool is_zero() const { return scale_ == 0; }
  const Rational& scale() const { return scale_; }
  const std::map<LinearForm, int>& powers() const { return powers_; }
  int virtual_degree() const;

 private:
  Rational scale_{1};
  std::map<LinearForm, int> powers_;
};

RatFn to_ratfn(const FactoredTerm& t);

// Canonical RatFn of sum(terms). Expansion of the individual numerators may
// run on several threads; the result does not depend on scheduling.
RatFn sum_factored(std::span<const FactoredTerm> terms);

// a * f, for linear f; faster than the generic product.
MPoly mul_linear(const MPoly& a, const LinearForm& f);

// Whether f divides p, decided exactly. A modular evaluation on the hyperplane
// f = 0 rejects most non-divisors without a full division.
bool linear_divides(const MPoly& p, const LinearForm& f);
std::optional<MPoly> divide_by_linear(const MPoly& p, const LinearForm& f);

}  // namespace cy4
