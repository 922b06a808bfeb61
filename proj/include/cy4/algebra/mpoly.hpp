#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cy4/algebra/rational.hpp"

namespace cy4 {

// Polynomial variables. lambda_0 never appears: it is eliminated through
// lambda_0 = -(lambda_1 + lambda_2 + lambda_3) before anything reaches MPoly.
// The enumerator order is the lex tie-break order of the term ordering.
enum class Var : std::uint8_t { m = 0, l1 = 1, l2 = 2, l3 = 3 };

inline constexpr std::size_t kNumVars = 4;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::m, Var::l1, Var::l2, Var::l3};

const char* var_name(Var v);

using Exponents = std::array<std::uint32_t, kNumVars>;
using Assignment = std::map<Var, Rational>;

// Graded lexicographic comparison: total degree first, then exponents of
// m, l1, l2, l3 in that order.
bool grlex_greater(const Exponents& a, const Exponents& b);

unsigned total_degree(const Exponents& e);

struct Term {
  Exponents exp{};
  Rational coeff;
};

// Sparse multivariate polynomial over Q in (m, l1, l2, l3). Terms are kept in
// strictly decreasing grlex order with no zero coefficients, so equality is
// structural.
class MPoly {
 public:
  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly variable(Var v);
  static MPoly monomial(const Exponents& e, const Rational& c);
  // Builds from arbitrary (possibly repeated, unordered, zero) terms.
  static MPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  Rational constant_term() const;

  unsigned total_degree() const;
  unsigned degree(Var v) const;
  bool contains(Var v) const { return degree(v) > 0; }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly shifted(const Exponents& e) const;

  // Exact value; every variable that occurs must be assigned.
  Rational eval(const Assignment& point) const;
  MPoly substitute(Var v, const Rational& value) const;
  MPoly substitute(Var v, const MPoly& value) const;

  // coefficients_in(v)[i] is the coefficient of v^i; each is free of v.
  std::vector<MPoly> coefficients_in(Var v) const;
  static MPoly from_coefficients(Var v, const std::vector<MPoly>& coeffs);

  // Positive rational c with this / c having coprime integer coefficients.
  Rational content() const;
  // this / content(), sign-adjusted so the leading coefficient is positive.
  MPoly primitive_part() const;

 private:
  std::vector<Term> terms_;
};

MPoly pow(const MPoly& p, unsigned e);

// Quotient when b divides a exactly, otherwise nullopt. Throws DivisionByZero
// for b == 0.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

// Greatest common divisor, normalized to integer coefficients with content 1
// and positive leading coefficient. gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

// "m^2 + m*l3", "-3/2*l1*l2 + 1".
std::string to_string(const MPoly& p);

}  // namespace cy4
