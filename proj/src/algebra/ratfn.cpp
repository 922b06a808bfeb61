#include "cy4/algebra/ratfn.hpp"

#include "cy4/errors.hpp"

namespace cy4 {

namespace {

MPoly exact(const MPoly& a, const MPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error("internal: expected exact polynomial division");
  return std::move(*q);
}

bool is_one(const MPoly& p) { return p.is_constant() && !p.is_zero() && p.leading_coeff() == 1; }

}  // namespace

void RatFn::normalize_content() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = 0;
  Integer l = 1;
  for (const MPoly* p : {&num_, &den_}) {
    for (const auto& t : p->terms()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  }
  Rational scale(l, g);
  scale.canonicalize();
  if (den_.leading_coeff() < 0) scale = -scale;
  if (scale != 1) {
    num_ *= scale;
    den_ *= scale;
  }
}

RatFn RatFn::from_coprime(MPoly num, MPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  RatFn r(std::move(num), std::move(den), 0);
  r.normalize_content();
  return r;
}

RatFn RatFn::make(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) return {};
  if (den.is_constant()) return from_coprime(num, den);
  MPoly g = gcd(num, den);
  if (g.is_constant()) return from_coprime(num, den);
  return from_coprime(exact(num, g), exact(den, g));
}

Rational RatFn::constant_value() const {
  if (!is_constant()) throw InvalidInput("rational function is not a constant: " + to_string(*this));
  if (num_.is_zero()) return 0;
  return num_.leading_coeff() / den_.leading_coeff();
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_constant() && b.den_.is_constant()) {
    return RatFn::from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  if (a.den_ == b.den_) return RatFn::make(a.num_ + b.num_, a.den_);
  MPoly g = gcd(a.den_, b.den_);
  if (g.is_constant()) {
    return RatFn::from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  MPoly ad = exact(a.den_, g);
  MPoly bd = exact(b.den_, g);
  MPoly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return {};
  MPoly t = gcd(num, g);
  if (!t.is_constant()) {
    num = exact(num, t);
    g = exact(g, t);
  }
  return RatFn::from_coprime(std::move(num), ad * bd * g);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) {
    return RatFn::from_coprime(a.num_ * b.num_, a.den_ * b.den_);
  }
  MPoly g1 = gcd(a.num_, b.den_);
  MPoly g2 = gcd(b.num_, a.den_);
  MPoly an = is_one(g1) ? a.num_ : exact(a.num_, g1);
  MPoly bd = is_one(g1) ? b.den_ : exact(b.den_, g1);
  MPoly bn = is_one(g2) ? b.num_ : exact(b.num_, g2);
  MPoly ad = is_one(g2) ? a.den_ : exact(a.den_, g2);
  return RatFn::from_coprime(an * bn, ad * bd);
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return from_coprime(den_, num_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  return a * b.inverse();
}

Rational RatFn::eval(const Assignment& point) const {
  Rational d = den_.eval(point);
  if (d == 0) throw PoleAtPoint("denominator " + to_string(den_) + " vanishes at the point");
  return num_.eval(point) / d;
}

RatFn RatFn::substitute(Var v, const Rational& value) const {
  MPoly d = den_.substitute(v, value);
  if (d.is_zero()) throw PoleAtPoint("denominator " + to_string(den_) + " vanishes after substitution");
  return make(num_.substitute(v, value), d);
}

RatFn RatFn::substitute(Var v, const RatFn& value) const {
  // Horner in RatFn arithmetic over the coefficients in v.
  auto horner = [&](const MPoly& p) {
    auto coeffs = p.coefficients_in(v);
    RatFn r;
    for (std::size_t i = coeffs.size(); i-- > 0;) r = r * value + RatFn(coeffs[i]);
    return r;
  };
  RatFn d = horner(den_);
  if (d.is_zero()) throw PoleAtPoint("denominator " + to_string(den_) + " vanishes after substitution");
  return horner(num_) / d;
}

RatFn pow(const RatFn& f, int e) {
  if (e < 0) return pow(f.inverse(), -e);
  // Powers of a canonical form stay coprime.
  return RatFn::from_coprime(pow(f.num(), static_cast<unsigned>(e)),
                             pow(f.den(), static_cast<unsigned>(e)));
}

RatFn binomial(const RatFn& x, unsigned long k) {
  RatFn out(1);
  for (unsigned long j = 0; j < k; ++j) out = out * (x - RatFn(static_cast<long>(j)));
  return out * RatFn(Rational(1) / Rational(factorial(k)));
}

RatFn lambda0() {
  return RatFn(-(MPoly::variable(Var::l1) + MPoly::variable(Var::l2) + MPoly::variable(Var::l3)));
}

std::string to_string(const RatFn& f) {
  if (f.den().is_constant() && f.den().leading_coeff() == 1) return to_string(f.num());
  const MPoly& n = f.num();
  const MPoly& d = f.den();
  bool num_sum = n.size() > 1;
  bool den_sum = d.size() > 1;
  std::string ns = to_string(n);
  std::string ds = to_string(d);
  if (num_sum) ns = "(" + ns + ")";
  bool den_product = false;
  if (!den_sum) {
    const Term& t = d.leading_term();
    unsigned vars = 0;
    for (auto e : t.exp) vars += e > 0 ? 1 : 0;
    den_product = (t.coeff != 1 && vars > 0) || vars > 1;
  }
  if (den_sum || den_product) ds = "(" + ds + ")";
  return num_sum || den_sum ? ns + " / " + ds : ns + "/" + ds;
}

}  // namespace cy4
