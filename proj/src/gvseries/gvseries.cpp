#include "cy4/gvseries.hpp"

#include <array>
#include <string>

#include "cy4/errors.hpp"

namespace cy4 {

namespace {

constexpr std::array<std::pair<GVKind, std::string_view>, 6> kKindNames{{
    {GVKind::GW0, "GW0"},
    {GVKind::GV0, "GV0"},
    {GVKind::GW1, "GW1"},
    {GVKind::GV1, "GV1"},
    {GVKind::N0C2, "N0C2"},
    {GVKind::MEETING, "MEETING"},
}};

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

long sigma(int n) {
  long s = 0;
  for (int i = 1; i <= n; ++i) {
    if (n % i == 0) s += i;
  }
  return s;
}

void put(GVTable& t, int d, const Rational& v) {
  if (v != 0) t.entries[d] = v;
}

// Contribution of n0(c_2) and the meeting invariants to GW_1 in degree D.
Rational genus1_correction(const GVTable& n0c2, const GVTable& meeting, int D) {
  Rational out = 0;
  for (const auto& [b, v] : n0c2.entries) {
    if (D % b == 0) out -= v * ratio(b, D) / 24;
  }
  for (const auto& [key, v] : meeting.pairs) {
    int s = key.first + key.second;
    if (D % s == 0) out += v * ratio(s, D) / 24;
  }
  return out;
}

void require_kind(const GVTable& t, GVKind kind) {
  if (t.kind != kind) {
    throw InvalidInput("expected a " + std::string(to_string(kind)) + " table, got " + std::string(to_string(t.kind)));
  }
}

}  // namespace

std::string_view to_string(GVKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "";
}

std::optional<GVKind> parse_gv_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

Rational GVTable::at(int d) const {
  auto it = entries.find(d);
  return it == entries.end() ? Rational(0) : it->second;
}

int GVTable::max_degree() const { return entries.empty() ? 0 : entries.rbegin()->first; }

GVTable gv0_to_gw0(const GVTable& gv, int max_degree) {
  require_kind(gv, GVKind::GV0);
  GVTable out{GVKind::GW0, {}, {}};
  for (int d = 1; d <= max_degree; ++d) {
    Rational s = 0;
    for (int e = 1; e <= d; ++e) {
      if (d % e == 0) s += gv.at(d / e) / (e * e);
    }
    put(out, d, s);
  }
  return out;
}

GVTable gw0_to_gv0(const GVTable& gw, int max_degree) {
  require_kind(gw, GVKind::GW0);
  GVTable out{GVKind::GV0, {}, {}};
  for (int d = 1; d <= max_degree; ++d) {
    Rational s = 0;
    for (int e = 1; e <= d; ++e) {
      if (d % e == 0) s += ratio(mobius(e), e * e) * gw.at(d / e);
    }
    put(out, d, s);
  }
  return out;
}

GVTable gv1_to_gw1(const GVTable& gv1, const GVTable& n0c2, const GVTable& meeting, int max_degree) {
  require_kind(gv1, GVKind::GV1);
  require_kind(n0c2, GVKind::N0C2);
  require_kind(meeting, GVKind::MEETING);
  GVTable out{GVKind::GW1, {}, {}};
  for (int D = 1; D <= max_degree; ++D) {
    Rational s = genus1_correction(n0c2, meeting, D);
    for (int e = 1; e <= D; ++e) {
      if (D % e == 0) s += ratio(sigma(e), e) * gv1.at(D / e);
    }
    put(out, D, s);
  }
  return out;
}

GVTable gw1_to_gv1(const GVTable& gw1, const GVTable& n0c2, const GVTable& meeting, int max_degree) {
  require_kind(gw1, GVKind::GW1);
  require_kind(n0c2, GVKind::N0C2);
  require_kind(meeting, GVKind::MEETING);
  GVTable out{GVKind::GV1, {}, {}};
  for (int D = 1; D <= max_degree; ++D) {
    Rational s = gw1.at(D) - genus1_correction(n0c2, meeting, D);
    for (int e = 2; e <= D; ++e) {
      if (D % e == 0) s -= ratio(sigma(e), e) * out.at(D / e);
    }
    put(out, D, s);
  }
  return out;
}

Series2 macmahon(int order) {
  Series2 out = Series2::one(0, order);
  for (int k = 1; k <= order; ++k) out = out * binomial_factor(RatFn(1), 0, k, RatFn(-k), 0, order);
  return out;
}

Series2 nagao_nakajima(int cutoff, int q_order, int y_order) {
  if (cutoff < 0) throw InvalidInput("cutoff must be non-negative");
  Series2 out = Series2::one(q_order, y_order);
  for (int k = 1; k <= std::min(cutoff, q_order); ++k) {
    Series2 base = Series2::one(q_order, y_order) - Series2::monomial(k, 1, RatFn(k % 2 == 0 ? 1 : -1), q_order, y_order);
    out = out * int_pow(base, k);
  }
  return out;
}

long chamber_cutoff(const ClassData& c, const Chamber& chamber, int q_order) {
  if (chamber.infinite) return q_order;
  if (chamber.t <= 0) throw InvalidChamber("stability parameter must be positive, got " + chamber.t.get_str());
  Rational x = chamber.t * c.omega_beta;
  mpz_class floor;
  mpz_fdiv_q(floor.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return floor.get_si();
}

Series2 conjecture_rhs(const std::vector<ClassData>& classes, const Chamber& chamber, int q_order, int y_order) {
  if (!chamber.infinite && chamber.t <= 0) {
    throw InvalidChamber("stability parameter must be positive, got " + chamber.t.get_str());
  }
  Series2 out = Series2::one(q_order, y_order);
  for (const ClassData& c : classes) {
    if (c.omega_beta < 1) throw InvalidInput("omega_beta must be at least 1");
    if (c.degree < 1) throw InvalidInput("class degree must be at least 1");
    if (c.n0D != 0) {
      long cutoff = std::min<long>(chamber_cutoff(c, chamber, q_order), q_order);
      for (int k = 1; k <= cutoff; ++k) {
        RatFn exponent(Rational(c.n0D * k));
        RatFn sign(k % 2 == 0 ? 1 : -1);
        out = out * binomial_factor(sign, k, c.degree, exponent, q_order, y_order);
      }
    }
    if (c.n1X != 0) {
      for (int k = 1; k * c.degree <= y_order; ++k) {
        out = out * binomial_factor(RatFn(1), 0, k * c.degree, RatFn(Rational(-k * c.n1X)), q_order, y_order);
      }
    }
  }
  return out;
}

Integer grassmannian_sum(int k, int a, int d) {
  if (k < 0 || a < 0 || d < 0) throw InvalidInput("grassmannian_sum needs non-negative arguments");
  // ways[s] = number-weighted compositions of s into the parts seen so far.
  std::vector<Integer> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (int part = 0; part < a; ++part) {
    std::vector<Integer> next(ways.size(), 0);
    for (int s = 0; s <= d; ++s) {
      if (ways[s] == 0) continue;
      for (int di = 0; di <= k && s + di <= d; ++di) next[s + di] += ways[s] * binomial(k, di);
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(d)];
}

}  // namespace cy4
