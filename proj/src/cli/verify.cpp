#include "cy4/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "cy4/cohmodels.hpp"
#include "cy4/errors.hpp"
#include "cy4/jspairs.hpp"

namespace cy4 {

namespace {

class Recorder {
 public:
  explicit Recorder(VerifyReport& r) : report_(r) {}

  void check(std::string id, Json params, const std::string& expected, const std::string& actual) {
    report_.checks.push_back({std::move(id), std::move(params), expected == actual, expected, actual});
  }
  void check(std::string id, Json params, const RatFn& expected, const RatFn& actual) {
    check(std::move(id), std::move(params), to_string(expected), to_string(actual));
  }
  void check(std::string id, Json params, bool ok) {
    report_.checks.push_back({std::move(id), std::move(params), ok, "true", ok ? "true" : "false"});
  }

 private:
  VerifyReport& report_;
};

int bound(const VerifyOptions& o, int fallback) { return o.n_max > 0 ? o.n_max : fallback; }

RatFn sign_l3_power(int d) {
  // 1 / (d! l3^d)
  RatFn l3 = RatFn::variable(Var::l3);
  return pow(l3, -d) * RatFn(Rational(1) / Rational(factorial(static_cast<unsigned long>(d))));
}

void closed_vs_localization(Recorder& r, const VerifyOptions& o) {
  int d_max = bound(o, 5);
  for (int k = 0; k <= 3; ++k) {
    for (int d = 1; d <= d_max; ++d) {
      int n = (k + 1) * d;
      Json p{{"n", n}, {"d", d}};
      RatFn loc = js_invariant_localization(n, d).value;
      r.check("localization=closed", p, js_invariant_closed(n, d).value, loc);
      r.check("localization=predicted", p, js_invariant_predicted(n, d).value, loc);
    }
  }
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= 4; ++d) {
      if (n % d == 0) continue;
      r.check("vanishing", {{"n", n}, {"d", d}}, RatFn(0), js_invariant_localization(n, d).value);
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= n; ++d) {
      for (const FixedPair& fp : enumerate_fixed_pairs(n, d)) {
        Json p{{"k", fp.k}, {"composition", fp.composition}};
        bool ok = true;
        try {
          TChar v = sqrt_obstruction(fp);
          ok = v + bar(v) == full_obstruction(fp);
        } catch (const FixedPartNonzero&) {
          ok = false;
        }
        r.check("square-root", p, ok);
      }
    }
  }
}

void binomial_theorem(Recorder& r, const VerifyOptions& o) {
  int d_max = bound(o, 3);
  RatFn x0 = -RatFn::variable(Var::m) / RatFn::variable(Var::l3);
  for (int k = 0; k <= 2; ++k) {
    for (int d = 1; d <= d_max; ++d) {
      int n = (k + 1) * d;
      Json p{{"n", n}, {"d", d}};
      RatFn predicted = js_invariant_predicted(n, d).value;
      Series2 b = binom_series(RatFn(n / d) * x0, d);
      r.check("binomial-coefficient", p, predicted, b.coeff(0, d));
      std::vector<std::pair<long, RatFn>> samples;
      for (long m = 0; m <= n; ++m) samples.emplace_back(m, js_invariant_localization_at(n, d, m));
      r.check("interpolation", p, predicted, fit_poly_in_m(samples, n).to_ratfn());
    }
  }
}

void insertion_free_suite(Recorder& r, const VerifyOptions& o) {
  int d_max = bound(o, 5);
  for (int k = 0; k <= 3; ++k) {
    for (int d = 1; d <= d_max; ++d) {
      int n = (k + 1) * d;
      RatFn expected = k == 0 ? sign_l3_power(d) : RatFn(0);
      r.check("insertion-free", {{"n", n}, {"d", d}}, expected, insertion_free(n, d));
    }
  }
}

std::vector<Integer> sigma2_macmahon(int order) {
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Integer s = 0;
    for (int j = 1; j <= n; ++j) {
      Integer s2 = 0;
      for (int e = 1; e <= j; ++e) {
        if (j % e == 0) s2 += e * e;
      }
      s += s2 * c[static_cast<std::size_t>(n - j)];
    }
    c[static_cast<std::size_t>(n)] = s / n;
  }
  return c;
}

void macmahon_suite(Recorder& r, const VerifyOptions& o) {
  int order = bound(o, 12);
  Series2 m = macmahon(order);
  std::vector<Integer> oracle = sigma2_macmahon(order);
  for (int j = 0; j <= order; ++j) {
    r.check("coefficient", {{"y", j}}, RatFn(Rational(oracle[static_cast<std::size_t>(j)])), m.coeff(0, j));
  }
}

GVTable random_table(std::mt19937_64& rng, GVKind kind, int support) {
  std::uniform_int_distribution<long> value(-1000, 1000);
  GVTable t{kind, {}, {}};
  for (int d = 1; d <= support; ++d) {
    if (long v = value(rng); v != 0) t.entries[d] = v;
  }
  return t;
}

void gv_roundtrip(Recorder& r, const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed);
  int s0 = bound(o, 20);
  int s1 = o.n_max > 0 ? o.n_max : 12;
  for (int i = 0; i < 100; ++i) {
    GVTable n = random_table(rng, GVKind::GV0, s0);
    GVTable gw = gv0_to_gw0(n, s0);
    r.check("genus0", {{"table", i}}, to_json(n).dump(), to_json(gw0_to_gv0(gw, s0)).dump());
  }
  for (int i = 0; i < 100; ++i) {
    GVTable n1 = random_table(rng, GVKind::GV1, s1);
    GVTable c2 = random_table(rng, GVKind::N0C2, s1);
    GVTable meet{GVKind::MEETING, {}, {}};
    std::uniform_int_distribution<int> b(1, std::max(1, s1 / 2));
    std::uniform_int_distribution<long> v(-50, 50);
    for (int j = 0; j < 3; ++j) {
      if (long x = v(rng); x != 0) meet.pairs[{b(rng), b(rng)}] = x;
    }
    GVTable gw = gv1_to_gw1(n1, c2, meet, s1);
    r.check("genus1", {{"table", i}}, to_json(n1).dump(), to_json(gw1_to_gv1(gw, c2, meet, s1)).dump());
  }
}

void grassmannian(Recorder& r, const VerifyOptions& o) {
  int b = bound(o, 6);
  for (int k = 0; k <= b; ++k) {
    for (int a = 0; a <= b; ++a) {
      Series2 expected = binomial_factor(RatFn(-1), 0, 1, RatFn(k * a), 0, b);
      for (int d = 0; d <= b; ++d) {
        Integer g = grassmannian_sum(k, a, d);
        Json p{{"k", k}, {"a", a}, {"d", d}};
        r.check("convolution", p, to_string(binomial(k * a, d)), to_string(g));
        r.check("generating-series", p, expected.coeff(0, d), RatFn(Rational(g)));
      }
    }
  }
}

void conjecture_coefficients(Recorder& r, const VerifyOptions& o) {
  int n_max = bound(o, 10);
  auto pt_check = [&](const char* id, long n0, Json extra) {
    Series2 s = conjecture_rhs({{1, n0, 0, 1}}, Chamber::infinity(), n_max, 1);
    for (int n = 1; n <= n_max; ++n) {
      Json p = extra;
      p["n"] = n;
      RatFn expected((n % 2 == 0 ? -1 : 1) * n0 * n);
      r.check(id, p, expected, s.coeff(n, 1));
    }
  };
  pt_check("quintic", 2875, Json::object());
  for (long l = 1; l <= 3; ++l) pt_check("elliptic", 960 * l, {{"l", l}});
  for (int k = 1; k <= 4; ++k) {
    for (long a = 1; a <= 4; ++a) {
      int yo = 6;
      int qo = k * yo;
      Series2 s = conjecture_rhs({{1, a, 0, 1}}, Chamber::at(k), qo, yo);
      Series2 f = binomial_factor(RatFn(k % 2 == 0 ? 1 : -1), k, 1, RatFn(k * a), qo, yo);
      bool ok = true;
      for (int d = 0; d <= yo; ++d) ok = ok && s.coeff(k * d, d) == f.coeff(k * d, d);
      r.check("js-chamber", {{"k", k}, {"a", a}}, ok);
    }
  }
}

void appendix(Recorder& r, const VerifyOptions& o) {
  int n_max = bound(o, 6);
  for (int n = 1; n <= n_max; ++n) r.check("pn2-vanishing", {{"n", n}}, RatFn(0), pn2_vanishing(n));
  for (int n = 1; n <= std::max(8, n_max); ++n) r.check("multinomial", {{"n", n}}, multinomial_vanishing_check(n));
  for (int h0 = 1; h0 <= 8; ++h0) {
    for (int n = 1; n <= h0; ++n) {
      r.check("proj-bundle", {{"h0", h0}, {"n", n}}, to_string(Rational(n)), to_string(proj_bundle_coefficient(h0, n)));
    }
  }
}

using SuiteFn = std::function<void(Recorder&, const VerifyOptions&)>;

const std::vector<std::pair<std::string_view, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string_view, SuiteFn>> table{
      {"closed-vs-localization", closed_vs_localization},
      {"binomial-theorem", binomial_theorem},
      {"insertion-free", insertion_free_suite},
      {"macmahon", macmahon_suite},
      {"gv-roundtrip", gv_roundtrip},
      {"grassmannian", grassmannian},
      {"conjecture-coefficients", conjecture_coefficients},
      {"appendix", appendix},
  };
  return table;
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

Json VerifyReport::to_json() const {
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    Json entry{{"id", c.id}, {"params", c.params}, {"pass", c.pass}};
    if (!c.pass) {
      entry["expected"] = c.expected;
      entry["actual"] = c.actual;
    }
    checks_json.push_back(std::move(entry));
  }
  return {{"suite", suite}, {"pass", passed()}, {"checks", std::move(checks_json)}};
}

const std::vector<std::string_view>& verify_suites() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

VerifyReport run_suite(std::string_view suite, const VerifyOptions& options) {
  for (const auto& [name, fn] : suite_table()) {
    if (name != suite) continue;
    VerifyReport report{std::string(name), {}, 0};
    Recorder rec(report);
    auto start = std::chrono::steady_clock::now();
    fn(rec, options);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw InvalidInput("unknown verify suite '" + std::string(suite) + "'");
}

}  // namespace cy4
