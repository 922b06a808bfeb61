#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cy4/algebra/ratfn.hpp"
#include "cy4/characters.hpp"

namespace cy4 {

// Torus-fixed JS pair on the local resolved conifold: level k and a
// composition (d_0, ..., d_k) of the degree.
struct FixedPair {
  int k = 0;
  std::vector<int> composition;

  int d() const;
  int n() const { return (k + 1) * d(); }
  friend bool operator==(const FixedPair&, const FixedPair&) = default;
};

// Fixed pairs with chi = n and degree d, compositions in lexicographically
// decreasing order. Empty unless n = (k+1)d; (0, 0) gives the single empty pair.
std::vector<FixedPair> enumerate_fixed_pairs(int n, int d);

// Normal data of the zero section P^1 in X = O(-1,-1,0) and in Y = O(-1,0).
std::span<const NormalLine> normal_bundle_x();
std::span<const NormalLine> normal_bundle_y();

// F = sum_i O((k-i)Z_inf + i Z_0) (sum_{j<d_i} t3^j).
P1Sheaf fixed_sheaf(const FixedPair& fp);
TChar chi_F(const FixedPair& fp);
// chi_X(F, F) through the Koszul resolution over the full normal bundle.
TChar chi_ff_x(const FixedPair& fp);
// chi_X(I, I)_0 = -chi_X(F) - bar(chi_X(F)) + chi_X(F, F).
TChar full_obstruction(const FixedPair& fp);
// -chi_X(F) + chi_Y(F, F). Throws FixedPartNonzero on a trivial weight.
TChar sqrt_obstruction(const FixedPair& fp);

enum class Method { localization, closed, predicted };
std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

struct InvariantResult {
  RatFn value;
  int n = 0;
  int d = 0;
  Method method = Method::localization;
};

// sum over fixed pairs of (-1)^d e_T(sqrt + chi_X(F) e^m).
InvariantResult js_invariant_localization(int n, int d);
// The same sum with m specialized to an integer.
RatFn js_invariant_localization_at(int n, int d, long m);
// The combinatorial sum over compositions, term by term as printed.
InvariantResult js_invariant_closed(int n, int d);
// (-1)^d binom((n/d)(-m/l3), d). Throws NotDivisible unless d | n.
InvariantResult js_invariant_predicted(int n, int d);

// sum over fixed pairs of e_T(sqrt), no sign and no insertion.
RatFn sqrt_euler_sum(int n, int d);
// Leading coefficient lim_{m -> inf} P_{n,d}(e^m) / m^n = (-1)^d sqrt_euler_sum.
RatFn insertion_free(int n, int d);

// Polynomial in m with coefficients in Q(l1, l2, l3), lowest degree first.
struct PolyInM {
  std::vector<RatFn> coeffs;
  RatFn to_ratfn() const;
};

// Interpolates samples (m_i, value_i) by a polynomial of degree <= degree.
// Extra samples must lie on the interpolant (InconsistentSamples otherwise);
// repeated m-values throw SingularSystem, too few samples InvalidInput.
PolyInM fit_poly_in_m(std::span<const std::pair<long, RatFn>> samples, int degree);

}  // namespace cy4
