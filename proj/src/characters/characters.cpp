#include "cy4/characters.hpp"

#include "cy4/errors.hpp"

namespace cy4 {

Weight canonical_weight(const Weight& w) { return {0, w[1] - w[0], w[2] - w[0], w[3] - w[0]}; }

Weight torus_weight(int i, int power) {
  Weight w{};
  w[static_cast<std::size_t>(i)] = power;
  return canonical_weight(w);
}

Weight operator+(const Weight& a, const Weight& b) {
  return canonical_weight({a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]});
}

Weight operator-(const Weight& w) { return canonical_weight({-w[0], -w[1], -w[2], -w[3]}); }

TChar TChar::monomial(const Weight& w, long mult) {
  TChar c;
  c.add(w, mult);
  return c;
}

void TChar::add(const Weight& w, long mult) {
  if (mult == 0) return;
  Weight k = canonical_weight(w);
  auto [it, inserted] = terms_.try_emplace(k, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

long TChar::rank() const {
  long r = 0;
  for (const auto& [w, n] : terms_) r += n;
  return r;
}

long TChar::fixed_part() const {
  auto it = terms_.find(Weight{});
  return it == terms_.end() ? 0 : it->second;
}

TChar& TChar::operator+=(const TChar& o) {
  for (const auto& [w, n] : o.terms_) add(w, n);
  return *this;
}

TChar& TChar::operator-=(const TChar& o) {
  for (const auto& [w, n] : o.terms_) add(w, -n);
  return *this;
}

TChar& TChar::operator*=(long c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, n] : terms_) n *= c;
  return *this;
}

TChar operator*(const TChar& a, const TChar& b) {
  TChar out;
  for (const auto& [wa, na] : a.terms_) {
    for (const auto& [wb, nb] : b.terms_) out.add(wa + wb, na * nb);
  }
  return out;
}

TChar TChar::shifted(const Weight& w) const {
  TChar out;
  for (const auto& [v, n] : terms_) out.add(v + w, n);
  return out;
}

TChar bar(const TChar& c) {
  TChar out;
  for (const auto& [w, n] : c.terms()) out += TChar::monomial(-w, n);
  return out;
}

TChar chi_p1(int p, int q) {
  TChar out;
  if (p + q >= -1) {
    for (int b = -q; b <= p; ++b) out += TChar::monomial(torus_weight(0, b));
  } else {
    for (int b = p + 1; b <= -q - 1; ++b) out -= TChar::monomial(torus_weight(0, b));
  }
  return out;
}

TChar chi_p1(const P1Sheaf& sheaf) {
  TChar out;
  for (const auto& l : sheaf) out += chi_p1(l.p, l.q).shifted(l.twist) * l.mult;
  return out;
}

TChar koszul_chi_hom(const P1Sheaf& a, const P1Sheaf& b, std::span<const NormalLine> normals) {
  TChar out;
  std::size_t subsets = std::size_t{1} << normals.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    int p = 0;
    int q = 0;
    Weight w{};
    long sign = 1;
    for (std::size_t s = 0; s < normals.size(); ++s) {
      if ((mask >> s) & 1U) {
        p += normals[s].p;
        q += normals[s].q;
        w = w + normals[s].twist;
        sign = -sign;
      }
    }
    for (const auto& la : a) {
      for (const auto& lb : b) {
        TChar piece = chi_p1(lb.p - la.p + p, lb.q - la.q + q).shifted(lb.twist + (-la.twist) + w);
        out += piece * (sign * la.mult * lb.mult);
      }
    }
  }
  return out;
}

LinearForm weight_form(const Weight& w, Insertion ins) {
  long cm = ins.kind == Insertion::Kind::symbolic ? 1 : 0;
  long constant = ins.kind == Insertion::Kind::value ? ins.value : 0;
  return LinearForm::from_lambda(w[0], w[1], w[2], w[3], cm, constant);
}

FactoredTerm euler_factored(const TChar& c, Insertion ins) {
  FactoredTerm out;
  for (const auto& [w, n] : c.terms()) {
    LinearForm f = weight_form(w, ins);
    if (f.is_zero()) {
      if (ins.kind == Insertion::Kind::value && n > 0) return FactoredTerm(0);
      throw ZeroWeight("character has a trivial weight with multiplicity " + std::to_string(n));
    }
    out.multiply(f, static_cast<int>(n));
  }
  return out;
}

RatFn euler_class(const TChar& c, Insertion ins) { return to_ratfn(euler_factored(c, ins)); }

}  // namespace cy4
