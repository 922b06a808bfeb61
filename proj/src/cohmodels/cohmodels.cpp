#include "cy4/cohmodels.hpp"

#include <numeric>
#include <string>

#include "cy4/errors.hpp"

namespace cy4 {

SymRingElt::SymRingElt(int n) : n_(n) {
  if (n < 1) throw InvalidInput("Sym^n model needs n >= 1");
}

SymRingElt SymRingElt::constant(int n, const RatFn& c) {
  SymRingElt x(n);
  x.add_term(0, 0, c);
  return x;
}

SymRingElt SymRingElt::xi(int n) {
  SymRingElt x(n);
  x.add_term(1, 0, RatFn(1));
  return x;
}

SymRingElt SymRingElt::fiber(int n) {
  SymRingElt x(n);
  x.add_term(0, 1, RatFn(1));
  return x;
}

SymRingElt SymRingElt::xi_prime(int n) { return xi(n) + fiber(n) * RatFn(n - 1); }

RatFn SymRingElt::coeff(int a, int b) const {
  auto it = coeffs_.find({a, b});
  return it == coeffs_.end() ? RatFn(0) : it->second;
}

void SymRingElt::add_term(int a, int b, const RatFn& c) {
  if (a < 0 || b < 0) throw InvalidInput("negative exponent in Sym^n model");
  if (b > 1 || a + b > n_ || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymRingElt& SymRingElt::operator+=(const SymRingElt& o) {
  if (n_ != o.n_) throw OrderMismatch("Sym^n models of different n");
  for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, c);
  return *this;
}

SymRingElt operator-(SymRingElt a, const SymRingElt& b) { return a += b * RatFn(-1); }

SymRingElt operator*(const SymRingElt& a, const SymRingElt& b) {
  if (a.n_ != b.n_) throw OrderMismatch("Sym^n models of different n");
  SymRingElt out(a.n_);
  for (const auto& [ka, ca] : a.coeffs_) {
    for (const auto& [kb, cb] : b.coeffs_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  }
  return out;
}

SymRingElt operator*(SymRingElt a, const RatFn& c) {
  if (c.is_zero()) {
    a.coeffs_.clear();
    return a;
  }
  for (auto& [k, v] : a.coeffs_) v = v * c;
  return a;
}

SymRingElt SymRingElt::inverse() const {
  RatFn c0 = coeff(0, 0);
  if (c0.is_zero()) throw NonUnitConstantTerm("element with zero constant term is not invertible");
  // x = c0 (1 + r) with r nilpotent of order n + 2.
  RatFn inv0 = c0.inverse();
  SymRingElt neg_r = constant(n_, RatFn(1)) - *this * inv0;
  SymRingElt sum = constant(n_, RatFn(1));
  SymRingElt power = sum;
  for (int j = 1; j <= n_ + 1; ++j) {
    power = power * neg_r;
    sum += power;
  }
  return sum * inv0;
}

SymRingElt pow(const SymRingElt& x, unsigned e) {
  SymRingElt out = SymRingElt::constant(x.n(), RatFn(1));
  SymRingElt base = x;
  while (e > 0) {
    if (e & 1U) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

RatFn sym_integrate(const SymRingElt& x) {
  int n = x.n();
  return x.coeff(n, 0) * RatFn(1 - n) + x.coeff(n - 1, 1);
}

SymRingElt evaluate(const std::vector<RatFn>& poly, const SymRingElt& x) {
  SymRingElt out(x.n());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) out = out * x + SymRingElt::constant(x.n(), *it);
  return out;
}

namespace {

// Truncated products of power series in x, lowest degree first.
std::vector<RatFn> series_mul(const std::vector<RatFn>& a, const std::vector<RatFn>& b, int order) {
  std::vector<RatFn> out(static_cast<std::size_t>(order) + 1, RatFn(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(order); ++j) {
      out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  return out;
}

// c^{order+1} / (x + c) = sum_j (-1)^j c^{order-j} x^j, truncated at x^order.
std::vector<RatFn> scaled_inverse_linear(const RatFn& c, int order) {
  std::vector<RatFn> out(static_cast<std::size_t>(order) + 1, RatFn(0));
  RatFn power(1);
  for (int j = order; j >= 0; --j) {
    out[static_cast<std::size_t>(j)] = j % 2 == 0 ? power : -power;
    power = power * c;
  }
  return out;
}

struct ClearedIntegrand {
  std::vector<RatFn> poly;  // D * F, polynomial coefficients
  RatFn scale;              // D = ((l2 - l1)(l3 - l1))^{n+1}
};

ClearedIntegrand cleared_integrand(int n) {
  RatFn l1 = RatFn::variable(Var::l1);
  RatFn l2 = RatFn::variable(Var::l2);
  RatFn l3 = -l1 - l2;
  std::vector<RatFn> f{RatFn(1)};
  for (const RatFn& c : {-2 * l1, l2, l3}) f = series_mul(f, {c, RatFn(1)}, n);
  RatFn c1 = -l1 + l2;
  RatFn c2 = -l1 + l3;
  for (const RatFn& c : {c1, c2}) f = series_mul(f, scaled_inverse_linear(c, n), n);
  return {std::move(f), pow(c1 * c2, n + 1)};
}

std::vector<RatFn> derivative(const std::vector<RatFn>& poly) {
  std::vector<RatFn> out;
  for (std::size_t i = 1; i < poly.size(); ++i) out.push_back(poly[i] * RatFn(static_cast<long>(i)));
  return out;
}

}  // namespace

std::vector<RatFn> pn2_integrand_poly(int n) {
  if (n < 1) throw InvalidInput("pn2 integrand needs n >= 1");
  ClearedIntegrand g = cleared_integrand(n);
  RatFn inv = g.scale.inverse();
  for (RatFn& c : g.poly) c = c * inv;
  return g.poly;
}

RatFn pn2_integral(const std::vector<RatFn>& poly, int n) {
  SymRingElt xi = SymRingElt::xi(n);
  SymRingElt f_xi = evaluate(poly, xi);
  SymRingElt f_prime = f_xi + SymRingElt::fiber(n) * evaluate(derivative(poly), xi) * RatFn(n - 1);
  return sym_integrate(pow(f_xi, static_cast<unsigned>(n - 1)) * f_prime);
}

RatFn pn2_vanishing(int n) {
  if (n < 1) throw InvalidInput("pn2 integrand needs n >= 1");
  // The integral is homogeneous of degree n in the integrand, so clearing the
  // denominators first keeps every intermediate polynomial.
  ClearedIntegrand g = cleared_integrand(n);
  return pn2_integral(g.poly, n) * pow(g.scale, -n);
}

std::vector<std::vector<int>> admissible_tuples(int n) {
  // sum k P_k = n makes (P_1, ..., P_n) a partition of n; P_0 fills up the count.
  std::vector<std::vector<int>> out;
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto& self, int remaining, int max_part, int parts) -> void {
    if (remaining == 0) {
      if (parts > n) return;
      p[0] = n - parts;
      out.push_back(p);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      ++p[static_cast<std::size_t>(k)];
      self(self, remaining - k, k, parts + 1);
      --p[static_cast<std::size_t>(k)];
    }
  };
  rec(rec, n, n, 0);
  return out;
}

bool multinomial_vanishing_check(int n) {
  if (n < 1) throw InvalidInput("multinomial check needs n >= 1");
  Integer nfact = factorial(static_cast<unsigned long>(n));
  for (const auto& p : admissible_tuples(n)) {
    int linear = 0;
    Integer sum = 0;
    for (int k = 0; k <= n; ++k) {
      int pk = p[static_cast<std::size_t>(k)];
      linear += (k - 1) * pk;
      if (pk == 0) continue;
      Integer denom = 1;
      for (int j = 0; j <= n; ++j) {
        int pj = p[static_cast<std::size_t>(j)] - (j == k ? 1 : 0);
        denom *= factorial(static_cast<unsigned long>(pj));
      }
      sum += (k - 1) * (nfact / denom);
    }
    if (sum != 0 || linear != 0) return false;
  }
  return true;
}

ProjRingElt::ProjRingElt(int N) {
  if (N < 1) throw InvalidInput("projective model needs N >= 1");
  coeffs_.assign(static_cast<std::size_t>(N), RatFn(0));
}

ProjRingElt ProjRingElt::constant(int N, const RatFn& c) {
  ProjRingElt x(N);
  x.coeffs_[0] = c;
  return x;
}

ProjRingElt ProjRingElt::hyperplane(int N) {
  ProjRingElt x(N);
  if (N > 1) x.coeffs_[1] = RatFn(1);
  return x;
}

RatFn ProjRingElt::coeff(int i) const {
  return i >= 0 && i < N() ? coeffs_[static_cast<std::size_t>(i)] : RatFn(0);
}

ProjRingElt operator+(const ProjRingElt& a, const ProjRingElt& b) {
  if (a.N() != b.N()) throw OrderMismatch("projective models of different dimension");
  ProjRingElt out(a.N());
  for (int i = 0; i < a.N(); ++i) out.coeffs_[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
  return out;
}

ProjRingElt operator*(const ProjRingElt& a, const ProjRingElt& b) {
  if (a.N() != b.N()) throw OrderMismatch("projective models of different dimension");
  ProjRingElt out(a.N());
  for (int i = 0; i < a.N(); ++i) {
    for (int j = 0; i + j < a.N(); ++j) {
      auto& slot = out.coeffs_[static_cast<std::size_t>(i + j)];
      slot = slot + a.coeff(i) * b.coeff(j);
    }
  }
  return out;
}

ProjRingElt ProjRingElt::inverse() const {
  if (coeffs_[0].is_zero()) throw NonUnitConstantTerm("element with zero constant term is not invertible");
  // Triangular solve of x * y = 1.
  ProjRingElt y(N());
  RatFn inv0 = coeffs_[0].inverse();
  y.coeffs_[0] = inv0;
  for (int k = 1; k < N(); ++k) {
    RatFn s(0);
    for (int i = 1; i <= k; ++i) s = s + coeff(i) * y.coeff(k - i);
    y.coeffs_[static_cast<std::size_t>(k)] = -s * inv0;
  }
  return y;
}

ProjRingElt pow(const ProjRingElt& x, int e) {
  ProjRingElt base = e < 0 ? x.inverse() : x;
  ProjRingElt out = ProjRingElt::constant(x.N(), RatFn(1));
  for (int i = 0; i < std::abs(e); ++i) out = out * base;
  return out;
}

RatFn proj_integrate(const ProjRingElt& x) { return x.coeff(x.N() - 1); }

Rational proj_bundle_coefficient(int h0, int n) {
  if (n < 1 || h0 < n) {
    throw InvalidInput("need 1 <= n <= h0, got h0=" + std::to_string(h0) + ", n=" + std::to_string(n));
  }
  int h1 = h0 - n;
  ProjRingElt one_plus_h = ProjRingElt::constant(h0, RatFn(1)) + ProjRingElt::hyperplane(h0);
  ProjRingElt integrand =
      pow(ProjRingElt::hyperplane(h0), h1) * pow(one_plus_h, h0) * pow(one_plus_h, -h1);
  return proj_integrate(integrand).constant_value();
}

}  // namespace cy4
