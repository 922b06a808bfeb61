#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cy4/algebra/ratfn.hpp"

namespace cy4 {

// Element sum c_{a,b} xi^a f^b of the Sym^n(E) toy ring: f^2 = 0 and classes
// of degree a + b > n vanish.
class SymRingElt {
 public:
  explicit SymRingElt(int n);
  static SymRingElt constant(int n, const RatFn& c);
  static SymRingElt xi(int n);
  static SymRingElt fiber(int n);
  // xi' = xi + (n-1) f.
  static SymRingElt xi_prime(int n);

  int n() const { return n_; }
  const std::map<std::pair<int, int>, RatFn>& coeffs() const { return coeffs_; }
  RatFn coeff(int a, int b) const;
  void add_term(int a, int b, const RatFn& c);

  SymRingElt& operator+=(const SymRingElt& o);
  friend SymRingElt operator+(SymRingElt a, const SymRingElt& b) { return a += b; }
  friend SymRingElt operator-(SymRingElt a, const SymRingElt& b);
  friend SymRingElt operator*(const SymRingElt& a, const SymRingElt& b);
  friend SymRingElt operator*(SymRingElt a, const RatFn& c);
  friend bool operator==(const SymRingElt&, const SymRingElt&) = default;

  // Needs a nonzero constant term.
  SymRingElt inverse() const;

 private:
  int n_;
  std::map<std::pair<int, int>, RatFn> coeffs_;
};

SymRingElt pow(const SymRingElt& x, unsigned e);

// int xi^n = 1 - n, int xi^{n-1} f = 1, everything else 0.
RatFn sym_integrate(const SymRingElt& x);

// Truncated polynomial sum_{i <= n} a_i x^i evaluated at a ring element.
SymRingElt evaluate(const std::vector<RatFn>& poly, const SymRingElt& x);

// Power series expansion, through x^n, of
// (x - 2l1)(x + l2)(x + l3) / ((x - l1 + l2)(x - l1 + l3)) with l3 = -l1 - l2.
std::vector<RatFn> pn2_integrand_poly(int n);

// int_{Sym^n E} F(xi)^{n-1} F(xi'), with F(xi') = F(xi) + (n-1) f F'(xi).
RatFn pn2_integral(const std::vector<RatFn>& poly, int n);
// The integral for the integrand above; zero for every n >= 1.
RatFn pn2_vanishing(int n);

// Admissible tuples (P_0, ..., P_n): sum P_k = n and sum k P_k = n.
std::vector<std::vector<int>> admissible_tuples(int n);
// sum_k (k-1) n! / (P_0! ... (P_k - 1)! ... P_n!) = 0 for every admissible tuple.
bool multinomial_vanishing_check(int n);

// Q[H]/(H^N).
class ProjRingElt {
 public:
  explicit ProjRingElt(int N);
  static ProjRingElt constant(int N, const RatFn& c);
  static ProjRingElt hyperplane(int N);

  int N() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<RatFn>& coeffs() const { return coeffs_; }
  RatFn coeff(int i) const;

  friend ProjRingElt operator+(const ProjRingElt& a, const ProjRingElt& b);
  friend ProjRingElt operator*(const ProjRingElt& a, const ProjRingElt& b);
  friend bool operator==(const ProjRingElt&, const ProjRingElt&) = default;
  ProjRingElt inverse() const;

 private:
  std::vector<RatFn> coeffs_;
};

ProjRingElt pow(const ProjRingElt& x, int e);
// Integral over P^{N-1}: the coefficient of H^{N-1}.
RatFn proj_integrate(const ProjRingElt& x);

// int_{P(H^0)} H^{h1} (1+H)^{h0} / (1+H)^{h1} with h1 = h0 - n; equals n.
// Throws InvalidInput unless 1 <= n <= h0.
Rational proj_bundle_coefficient(int h0, int n);

}  // namespace cy4
