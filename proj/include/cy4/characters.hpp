#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "cy4/algebra/linear_product.hpp"
#include "cy4/algebra/ratfn.hpp"

namespace cy4 {

// Exponent vector of t0^w0 t1^w1 t2^w2 t3^w3. On the Calabi-Yau torus
// t0 t1 t2 t3 = 1, so weights are classes modulo the diagonal (c, c, c, c);
// the stored representative always has w0 = 0.
using Weight = std::array<int, 4>;

Weight canonical_weight(const Weight& w);
// t_i^power as a weight.
Weight torus_weight(int i, int power = 1);
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& w);

// Virtual character of the torus: finite Z-linear combination of weights.
class TChar {
 public:
  TChar() = default;
  static TChar monomial(const Weight& w, long mult = 1);

  const std::map<Weight, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Sum of multiplicities (virtual dimension).
  long rank() const;
  // Multiplicity of the trivial weight.
  long fixed_part() const;

  TChar& operator+=(const TChar& o);
  TChar& operator-=(const TChar& o);
  TChar& operator*=(long c);
  friend TChar operator+(TChar a, const TChar& b) { return a += b; }
  friend TChar operator-(TChar a, const TChar& b) { return a -= b; }
  friend TChar operator-(const TChar& a) { return TChar() - a; }
  friend TChar operator*(const TChar& a, const TChar& b);
  friend TChar operator*(TChar a, long c) { return a *= c; }
  friend bool operator==(const TChar&, const TChar&) = default;

  // Multiplies by t^w.
  TChar shifted(const Weight& w) const;

 private:
  void add(const Weight& w, long mult);
  std::map<Weight, long> terms_;
};

// The involution t^w -> t^{-w}.
TChar bar(const TChar& c);

// Equivariant Euler characteristic of O(p Z_inf + q Z_0) on P^1, graded by t0:
// sum_{b=-q}^{p} t0^b when p + q >= -1, otherwise -sum_{b=p+1}^{-q-1} t0^b.
TChar chi_p1(int p, int q);

// mult copies of O(p Z_inf + q Z_0) (x) t^twist on the zero section P^1.
struct P1Line {
  int p = 0;
  int q = 0;
  Weight twist{};
  long mult = 1;
};
using P1Sheaf = std::vector<P1Line>;

// Summand O(p Z_inf + q Z_0) (x) t^twist of a normal bundle to P^1.
struct NormalLine {
  int p = 0;
  int q = 0;
  Weight twist{};
};

// chi of the sheaf on P^1.
TChar chi_p1(const P1Sheaf& sheaf);

// chi(i_* A, i_* B) on the total space of the normal bundle over P^1, via the
// Koszul resolution of the zero section:
//   sum_{S subset normals} (-1)^|S| chi_P1(A^dual B prod_{s in S} N_s).
TChar koszul_chi_hom(const P1Sheaf& a, const P1Sheaf& b, std::span<const NormalLine> normals);

// Optional insertion e^m added to every weight of a character.
struct Insertion {
  enum class Kind { none, symbolic, value };
  Kind kind = Kind::none;
  long value = 0;

  static Insertion none() { return {}; }
  static Insertion symbolic() { return {Kind::symbolic, 0}; }
  static Insertion at(long m) { return {Kind::value, m}; }
};

// Linear form w . (lambda_0, ..., lambda_3) (+ m), lambda_0 eliminated.
LinearForm weight_form(const Weight& w, Insertion ins = Insertion::none());

// e_T(sum n_w t^w (x) e^m) = prod_w (m + w.lambda)^{n_w} in factored form.
// Throws ZeroWeight when a weight with nonzero multiplicity has a vanishing
// linear form; with an integer insertion a vanishing factor of positive
// multiplicity instead makes the class zero.
FactoredTerm euler_factored(const TChar& c, Insertion ins = Insertion::none());
RatFn euler_class(const TChar& c, Insertion ins = Insertion::none());

}  // namespace cy4
