#include "cy4/algebra/mpoly.hpp"

#include <algorithm>
#include <utility>

#include "cy4/errors.hpp"

namespace cy4 {

const char* var_name(Var v) {
  switch (v) {
    case Var::m:
      return "m";
    case Var::l1:
      return "l1";
    case Var::l2:
      return "l2";
    case Var::l3:
      return "l3";
  }
  return "?";
}

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
  unsigned da = total_degree(a);
  unsigned db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

std::size_t index_of(Var v) { return static_cast<std::size_t>(v); }

// Sorts into decreasing grlex order and merges equal exponents.
void canonicalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_greater(x.exp, y.exp); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms = std::move(out);
}

// Merge of two canonical term lists, b scaled by sign.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exp, b[j].exp))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].exp, a[i].exp)) {
      out.push_back(subtract ? Term{b[j].exp, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

bool divides(const Exponents& small, const Exponents& big) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.push_back(Term{Exponents{}, c});
}

MPoly MPoly::variable(Var v) {
  Exponents e{};
  e[index_of(v)] = 1;
  return monomial(e, 1);
}

MPoly MPoly::monomial(const Exponents& e, const Rational& c) {
  MPoly p;
  if (c != 0) p.terms_.push_back(Term{e, c});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  MPoly p;
  canonicalize_terms(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && cy4::total_degree(terms_[0].exp) == 0);
}

Rational MPoly::constant_term() const {
  if (terms_.empty() || cy4::total_degree(terms_.back().exp) != 0) return 0;
  return terms_.back().coeff;
}

unsigned MPoly::total_degree() const {
  return terms_.empty() ? 0 : cy4::total_degree(terms_.front().exp);
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[index_of(v)]);
  return d;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  terms_ = merge_add(terms_, other.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  if (other.is_zero()) return *this;
  terms_ = merge_add(terms_, other.terms_, true);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) { return *this = *this * other; }

MPoly MPoly::shifted(const Exponents& e) const {
  MPoly r = *this;
  for (auto& t : r.terms_) {
    for (std::size_t i = 0; i < kNumVars; ++i) t.exp[i] += e[i];
  }
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() < b.size()) return b * a;
  if (b.size() == 1) {
    MPoly r = a.shifted(b.terms_[0].exp);
    r *= b.terms_[0].coeff;
    return r;
  }
  // Each row a * t_j is already sorted; accumulate rows by merging so the
  // working set stays canonical.
  MPoly acc;
  for (const auto& tb : b.terms_) {
    MPoly row = a.shifted(tb.exp);
    row *= tb.coeff;
    acc += row;
  }
  return acc;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Rational MPoly::eval(const Assignment& point) const {
  std::array<const Rational*, kNumVars> values{};
  for (const auto& [v, val] : point) values[index_of(v)] = &val;
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational prod = t.coeff;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (t.exp[i] == 0) continue;
      if (values[i] == nullptr) {
        throw InvalidInput(std::string("no value assigned to variable ") +
                           var_name(static_cast<Var>(i)));
      }
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), values[i]->get_num_mpz_t(), t.exp[i]);
      mpz_pow_ui(power.get_den_mpz_t(), values[i]->get_den_mpz_t(), t.exp[i]);
      prod *= power;
    }
    sum += prod;
  }
  return sum;
}

MPoly MPoly::substitute(Var v, const Rational& value) const {
  std::size_t vi = index_of(v);
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<Rational> powers{Rational(1)};
  for (const auto& t : terms_) {
    while (powers.size() <= t.exp[vi]) powers.push_back(powers.back() * value);
    Term nt{t.exp, t.coeff * powers[t.exp[vi]]};
    nt.exp[vi] = 0;
    out.push_back(std::move(nt));
  }
  return from_terms(std::move(out));
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  auto coeffs = coefficients_in(v);
  MPoly result;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    result = result * value + coeffs[i];
  }
  return result;
}

std::vector<MPoly> MPoly::coefficients_in(Var v) const {
  std::size_t vi = index_of(v);
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    Term nt = t;
    nt.exp[vi] = 0;
    buckets[t.exp[vi]].push_back(std::move(nt));
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // Dropping one variable keeps relative grlex order within a bucket only up
    // to total degree ties, so re-sort.
    out.push_back(from_terms(std::move(b)));
  }
  return out;
}

MPoly MPoly::from_coefficients(Var v, const std::vector<MPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (auto t : coeffs[i].terms_) {
      t.exp[index_of(v)] += static_cast<std::uint32_t>(i);
      terms.push_back(std::move(t));
    }
  }
  return from_terms(std::move(terms));
}

Rational MPoly::content() const {
  if (terms_.empty()) return 0;
  Integer g = 0;
  Integer l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  return c;
}

MPoly MPoly::primitive_part() const {
  if (terms_.empty()) return {};
  Rational c = content();
  if (leading_coeff() < 0) c = -c;
  MPoly r = *this;
  r *= Rational(1) / c;
  return r;
}

MPoly pow(const MPoly& p, unsigned e) {
  MPoly result = 1;
  MPoly base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

namespace {

// Variable to treat as main variable when dividing by b: prefer one whose
// leading coefficient in b is a constant, then the lowest degree.
Var division_variable(const MPoly& b) {
  std::optional<Var> best;
  bool best_const = false;
  unsigned best_deg = 0;
  for (Var v : kAllVars) {
    unsigned d = b.degree(v);
    if (d == 0) continue;
    bool lc_const = b.coefficients_in(v).back().is_constant();
    if (!best || (lc_const && !best_const) || (lc_const == best_const && d < best_deg)) {
      best = v;
      best_const = lc_const;
      best_deg = d;
    }
  }
  return *best;
}

}  // namespace

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return MPoly{};
  if (b.is_constant()) return a * MPoly(Rational(1 / b.leading_coeff()));
  if (b.is_monomial()) {
    const Term& tb = b.leading_term();
    std::vector<Term> out;
    out.reserve(a.size());
    Rational inv = Rational(1) / tb.coeff;
    for (const auto& t : a.terms()) {
      if (!divides(tb.exp, t.exp)) return std::nullopt;
      out.push_back(Term{exp_sub(t.exp, tb.exp), t.coeff * inv});
    }
    return MPoly::from_terms(std::move(out));
  }
  // Leading monomials must divide; cheap rejection before the main loop.
  if (!divides(b.leading_term().exp, a.leading_term().exp)) return std::nullopt;

  Var v = division_variable(b);
  std::vector<MPoly> rem = a.coefficients_in(v);
  std::vector<MPoly> bc = b.coefficients_in(v);
  std::size_t kb = bc.size() - 1;
  if (rem.size() - 1 < kb) return std::nullopt;
  std::size_t ka = rem.size() - 1;
  std::vector<MPoly> quo(ka - kb + 1);
  const MPoly& lcb = bc[kb];
  for (std::size_t i = ka + 1; i-- > kb;) {
    if (rem[i].is_zero()) continue;
    auto q = divide_exact(rem[i], lcb);
    if (!q) return std::nullopt;
    for (std::size_t j = 0; j < kb; ++j) {
      if (!bc[j].is_zero()) rem[i - kb + j] -= *q * bc[j];
    }
    quo[i - kb] = std::move(*q);
  }
  for (std::size_t j = 0; j < kb; ++j) {
    if (!rem[j].is_zero()) return std::nullopt;
  }
  return MPoly::from_coefficients(v, quo);
}

namespace {

MPoly normalized(const MPoly& p) { return p.primitive_part(); }

MPoly exact_quotient(const MPoly& a, const MPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error("internal: expected exact polynomial division");
  return std::move(*q);
}

MPoly gcd_all(const std::vector<MPoly>& polys) {
  MPoly g;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? normalized(p) : gcd(g, p);
    if (g.is_constant()) return g;
  }
  return g;
}

MPoly monomial_gcd(const Term& t, const MPoly& p) {
  Exponents e = t.exp;
  for (const auto& u : p.terms()) {
    for (std::size_t i = 0; i < kNumVars; ++i) e[i] = std::min(e[i], u.exp[i]);
  }
  return MPoly::monomial(e, 1);
}

// Sparse pseudo-remainder of a by b in v, both given as coefficient vectors.
std::vector<MPoly> pseudo_remainder(std::vector<MPoly> r, const std::vector<MPoly>& b) {
  std::size_t kb = b.size() - 1;
  const MPoly& lcb = b[kb];
  auto trim = [](std::vector<MPoly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  };
  trim(r);
  while (!r.empty() && r.size() - 1 >= kb) {
    MPoly lcr = r.back();
    std::size_t shift = r.size() - 1 - kb;
    for (auto& c : r) c *= lcb;
    for (std::size_t j = 0; j <= kb; ++j) r[shift + j] -= lcr * b[j];
    trim(r);
  }
  return r;
}

std::vector<MPoly> primitive_coeffs(const std::vector<MPoly>& c, MPoly* content_out) {
  MPoly cont = gcd_all(c);
  if (content_out != nullptr) *content_out = cont;
  std::vector<MPoly> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(x.is_zero() ? MPoly{} : exact_quotient(x, cont));
  return out;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return 1;
  if (a.is_monomial()) return monomial_gcd(a.leading_term(), b);
  if (b.is_monomial()) return monomial_gcd(b.leading_term(), a);
  if (a == b) return normalized(a);
  if (a.size() <= b.size()) {
    if (divide_exact(b, a)) return normalized(a);
  } else if (divide_exact(a, b)) {
    return normalized(b);
  }

  // A variable occurring in only one argument cannot occur in the gcd.
  for (Var v : kAllVars) {
    bool in_a = a.contains(v);
    bool in_b = b.contains(v);
    if (in_a && !in_b) return gcd(gcd_all(a.coefficients_in(v)), b);
    if (in_b && !in_a) return gcd(a, gcd_all(b.coefficients_in(v)));
  }

  Var v = Var::m;
  unsigned best = 0;
  for (Var w : kAllVars) {
    unsigned d = std::min(a.degree(w), b.degree(w));
    if (d > 0 && (best == 0 || d < best)) {
      best = d;
      v = w;
    }
  }

  MPoly ca;
  MPoly cb;
  std::vector<MPoly> pa = primitive_coeffs(a.coefficients_in(v), &ca);
  std::vector<MPoly> pb = primitive_coeffs(b.coefficients_in(v), &cb);
  MPoly content = gcd(ca, cb);
  if (pa.size() < pb.size()) std::swap(pa, pb);

  std::vector<MPoly> g;
  while (true) {
    std::vector<MPoly> r = pseudo_remainder(pa, pb);
    if (r.empty()) {
      g = pb;
      break;
    }
    if (r.size() == 1) {
      g = {MPoly(1)};
      break;
    }
    pa = std::move(pb);
    pb = primitive_coeffs(r, nullptr);
  }
  MPoly result = MPoly::from_coefficients(v, primitive_coeffs(g, nullptr)) * content;
  return normalized(result);
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    std::string mono;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (t.exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(static_cast<Var>(i));
      if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
    }
    std::string body;
    if (mono.empty()) {
      body = to_string(c);
    } else if (c == 1) {
      body = mono;
    } else {
      body = to_string(c) + "*" + mono;
    }
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace cy4
