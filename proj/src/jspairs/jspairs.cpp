#include "cy4/jspairs.hpp"

#include <array>
#include <numeric>
#include <set>
#include <string>

#include "cy4/algebra/linear_product.hpp"
#include "cy4/errors.hpp"
#include "cy4/parallel.hpp"

namespace cy4 {

namespace {

const std::array<NormalLine, 3> kNormalX{{
    {-1, 0, torus_weight(1, -1)},
    {-1, 0, torus_weight(2, -1)},
    {0, 0, torus_weight(3, -1)},
}};

// Y = O(-1, 0) keeps the t1 direction of X.
const std::array<NormalLine, 2> kNormalY{{
    {-1, 0, torus_weight(1, -1)},
    {0, 0, torus_weight(3, -1)},
}};

void compositions(int remaining, int parts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = remaining; first >= 0; --first) {
    prefix.push_back(first);
    compositions(remaining - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

Rational sign(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

const LinearForm kL3 = LinearForm::from_lambda(0, 0, 0, 1);

FactoredTerm localization_term(const FixedPair& fp, Insertion ins) {
  FactoredTerm t = euler_factored(sqrt_obstruction(fp));
  t.multiply(euler_factored(chi_F(fp), ins));
  t.multiply(sign(fp.d()));
  return t;
}

RatFn localization_sum(int n, int d, Insertion ins) {
  std::vector<FixedPair> pairs = enumerate_fixed_pairs(n, d);
  std::vector<FactoredTerm> terms =
      parallel_map(pairs.size(), [&](std::size_t i) { return localization_term(pairs[i], ins); });
  std::erase_if(terms, [](const FactoredTerm& t) { return t.is_zero(); });
  return sum_factored(terms);
}

}  // namespace

int FixedPair::d() const { return std::accumulate(composition.begin(), composition.end(), 0); }

std::vector<FixedPair> enumerate_fixed_pairs(int n, int d) {
  if (n == 0 && d == 0) return {FixedPair{0, {}}};
  if (d <= 0 || n < d || n % d != 0) return {};
  int k = n / d - 1;
  std::vector<std::vector<int>> comps;
  std::vector<int> prefix;
  compositions(d, k + 1, prefix, comps);
  std::vector<FixedPair> out;
  out.reserve(comps.size());
  for (auto& c : comps) out.push_back({k, std::move(c)});
  return out;
}

std::span<const NormalLine> normal_bundle_x() { return kNormalX; }
std::span<const NormalLine> normal_bundle_y() { return kNormalY; }

P1Sheaf fixed_sheaf(const FixedPair& fp) {
  P1Sheaf f;
  for (int i = 0; i < static_cast<int>(fp.composition.size()); ++i) {
    for (int j = 0; j < fp.composition[static_cast<std::size_t>(i)]; ++j) {
      f.push_back({fp.k - i, i, torus_weight(3, j), 1});
    }
  }
  return f;
}

TChar chi_F(const FixedPair& fp) { return chi_p1(fixed_sheaf(fp)); }

TChar chi_ff_x(const FixedPair& fp) {
  P1Sheaf f = fixed_sheaf(fp);
  return koszul_chi_hom(f, f, kNormalX);
}

TChar full_obstruction(const FixedPair& fp) {
  TChar chi = chi_F(fp);
  return chi_ff_x(fp) - chi - bar(chi);
}

TChar sqrt_obstruction(const FixedPair& fp) {
  P1Sheaf f = fixed_sheaf(fp);
  TChar v = koszul_chi_hom(f, f, kNormalY) - chi_p1(f);
  if (long fixed = v.fixed_part(); fixed != 0) {
    throw FixedPartNonzero("square root has trivial weight with multiplicity " + std::to_string(fixed));
  }
  return v;
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::localization:
      return "localization";
    case Method::closed:
      return "closed";
    case Method::predicted:
      return "predicted";
  }
  return "";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::localization, Method::closed, Method::predicted}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

InvariantResult js_invariant_localization(int n, int d) {
  return {localization_sum(n, d, Insertion::symbolic()), n, d, Method::localization};
}

RatFn js_invariant_localization_at(int n, int d, long m) { return localization_sum(n, d, Insertion::at(m)); }

InvariantResult js_invariant_closed(int n, int d) {
  InvariantResult r{RatFn(0), n, d, Method::closed};
  if (d == 0) {
    r.value = RatFn(n == 0 ? 1 : 0);
    return r;
  }
  if (n < d || n % d != 0) return r;
  int k = n / d - 1;
  Rational prefactor = sign(n);
  for (int i = 1; i <= k; ++i) prefactor /= Rational(factorial(static_cast<unsigned long>(i)));

  std::vector<FactoredTerm> terms;
  for (const FixedPair& fp : enumerate_fixed_pairs(n, d)) {
    const std::vector<int>& di = fp.composition;
    FactoredTerm t(prefactor);
    for (int x : di) t.multiply(Rational(1) / Rational(factorial(static_cast<unsigned long>(x))));
    // (j-i) + (d_i - d_j) l3/l0
    for (int i = 0; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) {
        t.multiply(LinearForm::from_lambda(j - i, 0, 0, di[i] - di[j]));
        t.multiply(LinearForm::from_lambda(1, 0, 0, 0), -1);
      }
    }
    for (int i = 0; i <= k; ++i) {
      // -m/l3 - a - b l0/l3
      for (int a = 0; a <= di[i] - 1; ++a) {
        for (int b = -i; b <= k - i; ++b) {
          t.multiply(Rational(-1));
          t.multiply(LinearForm::from_lambda(b, 0, 0, a, 1));
          t.multiply(kL3, -1);
        }
      }
      // 1/(a + b l0/l3) and 1/(a - b l0/l3)
      for (int a = 1; a <= di[i]; ++a) {
        for (int b = 1; b <= k - i; ++b) {
          t.multiply(kL3);
          t.multiply(LinearForm::from_lambda(b, 0, 0, a), -1);
        }
        for (int b = 1; b <= i; ++b) {
          t.multiply(kL3);
          t.multiply(LinearForm::from_lambda(-b, 0, 0, a), -1);
        }
      }
    }
    terms.push_back(std::move(t));
  }
  r.value = sum_factored(terms);
  return r;
}

InvariantResult js_invariant_predicted(int n, int d) {
  InvariantResult r{RatFn(1), n, d, Method::predicted};
  if (n == 0 && d == 0) return r;
  if (d == 0 || n % d != 0) {
    throw NotDivisible("predicted formula needs d | n, got n=" + std::to_string(n) + ", d=" + std::to_string(d));
  }
  RatFn x = RatFn(n / d) * (-RatFn::variable(Var::m) / RatFn::variable(Var::l3));
  r.value = RatFn(sign(d)) * binomial(x, static_cast<unsigned long>(d));
  return r;
}

RatFn sqrt_euler_sum(int n, int d) {
  std::vector<FixedPair> pairs = enumerate_fixed_pairs(n, d);
  std::vector<FactoredTerm> terms =
      parallel_map(pairs.size(), [&](std::size_t i) { return euler_factored(sqrt_obstruction(pairs[i])); });
  return sum_factored(terms);
}

RatFn insertion_free(int n, int d) { return RatFn(sign(d)) * sqrt_euler_sum(n, d); }

RatFn PolyInM::to_ratfn() const {
  RatFn out(0);
  RatFn m = RatFn::variable(Var::m);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * m + *it;
  return out;
}

PolyInM fit_poly_in_m(std::span<const std::pair<long, RatFn>> samples, int degree) {
  if (degree < 0) throw InvalidInput("interpolation degree must be non-negative");
  std::size_t points = static_cast<std::size_t>(degree) + 1;
  if (samples.size() < points) {
    throw InvalidInput("need " + std::to_string(points) + " samples, got " + std::to_string(samples.size()));
  }
  std::set<long> seen;
  for (const auto& [x, v] : samples) {
    if (!seen.insert(x).second) throw SingularSystem("repeated sample point m=" + std::to_string(x));
  }

  // Newton divided differences on the first degree+1 samples.
  std::vector<RatFn> c;
  c.reserve(points);
  for (std::size_t i = 0; i < points; ++i) c.push_back(samples[i].second);
  for (std::size_t j = 1; j < points; ++j) {
    for (std::size_t i = points - 1; i >= j; --i) {
      Rational step(samples[i].first - samples[i - j].first);
      c[i] = (c[i] - c[i - 1]) * RatFn(Rational(1) / step);
    }
  }
  // Expand c_0 + c_1 (m - x_0) + ... into the monomial basis.
  std::vector<RatFn> poly{c[points - 1]};
  for (std::size_t j = points - 1; j-- > 0;) {
    RatFn x(Rational(samples[j].first));
    std::vector<RatFn> next(poly.size() + 1, RatFn(0));
    for (std::size_t e = 0; e < poly.size(); ++e) {
      next[e + 1] = next[e + 1] + poly[e];
      next[e] = next[e] - x * poly[e];
    }
    next[0] = next[0] + c[j];
    poly = std::move(next);
  }
  while (poly.size() > 1 && poly.back().is_zero()) poly.pop_back();

  PolyInM out{std::move(poly)};
  for (std::size_t i = points; i < samples.size(); ++i) {
    RatFn value(0);
    RatFn x(Rational(samples[i].first));
    for (auto it = out.coeffs.rbegin(); it != out.coeffs.rend(); ++it) value = value * x + *it;
    if (value != samples[i].second) {
      throw InconsistentSamples("sample at m=" + std::to_string(samples[i].first) + " is off the interpolant");
    }
  }
  return out;
}

}  // namespace cy4
