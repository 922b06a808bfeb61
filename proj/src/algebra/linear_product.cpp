#include "cy4/algebra/linear_product.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cy4/errors.hpp"
#include "cy4/parallel.hpp"

namespace cy4 {

namespace {

// Leading position under grlex: variables in Var order, constant last.
long leading_coefficient(const LinearForm& f) {
  for (long c : f.coeffs) {
    if (c != 0) return c;
  }
  return 0;
}

// Returns (s, g) with f = s * g and g canonical: primitive, positive leading
// coefficient.
std::pair<long, LinearForm> canonical(const LinearForm& f) {
  long g = 0;
  for (long c : f.coeffs) g = std::gcd(g, c);
  if (leading_coefficient(f) < 0) g = -g;
  LinearForm out = f;
  for (long& c : out.coeffs) c /= g;
  return {g, out};
}

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce(long c) {
  long r = c % static_cast<long>(kPrime);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(kPrime) : r);
}

std::uint64_t reduce(const Integer& z) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), kPrime);
  return r.get_ui();
}

// Value of p mod kPrime at a pseudo-random point of the hyperplane f = 0.
// Returns nullopt when some coefficient denominator is not invertible.
std::optional<std::uint64_t> probe(const MPoly& p, const LinearForm& f, std::uint64_t seed) {
  std::size_t solve = kNumVars;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (f.coeffs[i] != 0) {
      solve = i;
      break;
    }
  }
  if (solve == kNumVars) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::array<std::uint64_t, kNumVars> x{};
  std::uint64_t rest = reduce(f.constant());
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (i == solve) continue;
    x[i] = rng() % kPrime;
    rest = (rest + mulmod(reduce(f.coeffs[i]), x[i])) % kPrime;
  }
  std::uint64_t inv = powmod(reduce(f.coeffs[solve]), kPrime - 2);
  x[solve] = mulmod((kPrime - rest) % kPrime, inv);
  std::uint64_t sum = 0;
  for (const auto& t : p.terms()) {
    std::uint64_t den = reduce(Integer(t.coeff.get_den()));
    if (den == 0) return std::nullopt;
    std::uint64_t v = mulmod(reduce(Integer(t.coeff.get_num())), powmod(den, kPrime - 2));
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (t.exp[i] != 0) v = mulmod(v, powmod(x[i], t.exp[i]));
    }
    sum = (sum + v) % kPrime;
  }
  return sum;
}

MPoly expand_numerator(const FactoredTerm& t, const std::map<LinearForm, int>& den_powers) {
  MPoly p = t.scale();
  for (const auto& [f, e] : t.powers()) {
    int shift = 0;
    if (auto it = den_powers.find(f); it != den_powers.end()) shift = it->second;
    for (int i = 0; i < e + shift; ++i) p = mul_linear(p, f);
  }
  for (const auto& [f, d] : den_powers) {
    if (t.powers().count(f) == 0) {
      for (int i = 0; i < d; ++i) p = mul_linear(p, f);
    }
  }
  return p;
}

}  // namespace

LinearForm LinearForm::from_lambda(long c0, long c1, long c2, long c3, long cm, long constant) {
  LinearForm f;
  f[Var::l1] = c1 - c0;
  f[Var::l2] = c2 - c0;
  f[Var::l3] = c3 - c0;
  f[Var::m] = cm;
  f.coeffs[kConst] = constant;
  return f;
}

bool LinearForm::is_zero() const {
  for (long c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

bool LinearForm::is_constant() const {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (coeffs[i] != 0) return false;
  }
  return true;
}

MPoly LinearForm::to_mpoly() const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (coeffs[i] == 0) continue;
    Exponents e{};
    e[i] = 1;
    terms.push_back(Term{e, Rational(coeffs[i])});
  }
  if (constant() != 0) terms.push_back(Term{Exponents{}, Rational(constant())});
  return MPoly::from_terms(std::move(terms));
}

std::string to_string(const LinearForm& f) { return to_string(f.to_mpoly()); }

FactoredTerm& FactoredTerm::multiply(const LinearForm& f, int exponent) {
  if (exponent == 0 || scale_ == 0) return *this;
  if (f.is_zero()) {
    if (exponent < 0) throw DivisionByZero("negative power of a vanishing linear form");
    scale_ = 0;
    powers_.clear();
    return *this;
  }
  auto [s, g] = canonical(f);
  Rational factor(s);
  Rational sp = 1;
  for (int i = 0; i < std::abs(exponent); ++i) sp *= factor;
  scale_ *= exponent > 0 ? sp : Rational(1) / sp;
  if (g.is_constant()) return *this;  // g == 1
  int& e = powers_[g];
  e += exponent;
  if (e == 0) powers_.erase(g);
  return *this;
}

FactoredTerm& FactoredTerm::multiply(const Rational& c) {
  scale_ *= c;
  if (scale_ == 0) powers_.clear();
  return *this;
}

FactoredTerm& FactoredTerm::multiply(const FactoredTerm& other) {
  multiply(other.scale_);
  if (scale_ == 0) return *this;
  for (const auto& [f, e] : other.powers_) {
    int& mine = powers_[f];
    mine += e;
    if (mine == 0) powers_.erase(f);
  }
  return *this;
}

int FactoredTerm::virtual_degree() const {
  int d = 0;
  for (const auto& [f, e] : powers_) d += e;
  return d;
}

RatFn to_ratfn(const FactoredTerm& t) {
  FactoredTerm one[] = {t};
  return sum_factored(one);
}

MPoly mul_linear(const MPoly& a, const LinearForm& f) {
  MPoly out;
  if (f.constant() != 0) out = a * Rational(f.constant());
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (f.coeffs[i] == 0) continue;
    Exponents e{};
    e[i] = 1;
    MPoly row = a.shifted(e);
    row *= Rational(f.coeffs[i]);
    out += row;
  }
  return out;
}

std::optional<MPoly> divide_by_linear(const MPoly& p, const LinearForm& f) {
  if (f.is_zero()) throw DivisionByZero("division by the zero linear form");
  if (p.is_zero()) return MPoly{};
  if (!f.is_constant()) {
    if (auto v = probe(p, f, 0x5eed); v && *v != 0) return std::nullopt;
  }
  return divide_exact(p, f.to_mpoly());
}

bool linear_divides(const MPoly& p, const LinearForm& f) { return divide_by_linear(p, f).has_value(); }

RatFn sum_factored(std::span<const FactoredTerm> terms) {
  std::map<LinearForm, int> den_powers;
  std::vector<const FactoredTerm*> live;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    live.push_back(&t);
    for (const auto& [f, e] : t.powers()) {
      if (e < 0) {
        int& d = den_powers[f];
        d = std::max(d, -e);
      }
    }
  }
  if (live.empty()) return {};

  std::vector<MPoly> parts = parallel_map(live.size(), [&](std::size_t i) {
    return expand_numerator(*live[i], den_powers);
  });
  MPoly num;
  for (const auto& p : parts) num += p;
  if (num.is_zero()) return {};

  MPoly den = 1;
  for (auto& [f, d] : den_powers) {
    while (d > 0) {
      auto q = divide_by_linear(num, f);
      if (!q) break;
      num = std::move(*q);
      --d;
    }
    for (int i = 0; i < d; ++i) den = mul_linear(den, f);
  }
  return RatFn::from_coprime(std::move(num), std::move(den));
}

}  // namespace cy4
