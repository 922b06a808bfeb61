#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "cy4/algebra/rational.hpp"
#include "cy4/series.hpp"

namespace cy4 {

enum class GVKind { GW0, GV0, GW1, GV1, N0C2, MEETING };
std::string_view to_string(GVKind kind);
std::optional<GVKind> parse_gv_kind(std::string_view name);

// Invariants indexed by curve degree d >= 1; MEETING tables use pair keys.
struct GVTable {
  GVKind kind = GVKind::GV0;
  std::map<int, Rational> entries;
  std::map<std::pair<int, int>, Rational> pairs;

  Rational at(int d) const;
  // Largest degree present, 0 when empty.
  int max_degree() const;
  friend bool operator==(const GVTable&, const GVTable&) = default;
};

// GW_d = sum_{e | d} n_{d/e} / e^2, for d <= max_degree.
GVTable gv0_to_gw0(const GVTable& gv, int max_degree);
// n_d = sum_{e | d} mu(e) / e^2 GW_{d/e}.
GVTable gw0_to_gv0(const GVTable& gw, int max_degree);

// GW_1 from n_1, n_0(c_2) and meeting invariants:
//   sum_{e | D} sigma(e)/e n_1(D/e) - 1/24 sum_{b | D} n0c2(b) b/D
//     + 1/24 sum_{(b1, b2): b1 + b2 | D} m(b1, b2) (b1 + b2)/D.
GVTable gv1_to_gw1(const GVTable& gv1, const GVTable& n0c2, const GVTable& meeting, int max_degree);
GVTable gw1_to_gv1(const GVTable& gw1, const GVTable& n0c2, const GVTable& meeting, int max_degree);

// M(y) = prod_{k >= 1} (1 - y^k)^{-k} through y^order.
Series2 macmahon(int order);

// prod_{k=1}^{cutoff} (1 - (-q)^k y)^k.
Series2 nagao_nakajima(int cutoff, int q_order, int y_order);

// Data of one fibre curve class.
struct ClassData {
  long omega_beta = 1;  // omega . beta
  Integer n0D = 0;      // genus 0 GV invariant of the divisor
  Rational n1X = 0;     // genus 1 GV invariant of the 4-fold
  int degree = 1;       // power of y recording the class
};

// Stability parameter t > 0, or t = infinity.
struct Chamber {
  bool infinite = true;
  Rational t = 0;

  static Chamber at(const Rational& t) { return {false, t}; }
  static Chamber infinity() { return {}; }
};

// [t (omega . beta)], capped by q_order when t is infinite.
long chamber_cutoff(const ClassData& c, const Chamber& chamber, int q_order);

// prod_beta prod_{k=1}^{[t(omega.beta)]} (1 - (-q)^k y^beta)^{k n0D} * prod_beta M(y^beta)^{n1X}.
// Throws InvalidChamber unless t > 0.
Series2 conjecture_rhs(const std::vector<ClassData>& classes, const Chamber& chamber, int q_order, int y_order);

// sum over d_1 + ... + d_a = d of prod binom(k, d_i).
Integer grassmannian_sum(int k, int a, int d);

}  // namespace cy4
