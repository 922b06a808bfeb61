#include <doctest.h>

#include <random>

#include "cy4/algebra/cy_expr.hpp"
#include "cy4/algebra/linear_product.hpp"
#include "cy4/algebra/ratfn.hpp"
#include "cy4/errors.hpp"
#include "generators.hpp"

using namespace cy4;
using cy4::testing::random_linear_form;
using cy4::testing::random_mpoly;
using cy4::testing::random_nonzero_mpoly;
using cy4::testing::random_ratfn;

namespace {

RatFn v(Var x) { return RatFn::variable(x); }

const RatFn m = v(Var::m);
const RatFn l1 = v(Var::l1);
const RatFn l2 = v(Var::l2);
const RatFn l3 = v(Var::l3);

}  // namespace

TEST_CASE("rational literals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -7 ") == -7);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
  CHECK(binomial(Rational(-1, 2), 2) == Rational(3, 8));
  CHECK(binomial(6, 3) == 20);
}

TEST_CASE("ratfn arithmetic examples") {
  CHECK(l1 / l3 + l2 / l3 == (l1 + l2) / l3);
  CHECK(to_string(l1 / l3 + l2 / l3) == "(l1 + l2) / l3");

  RatFn x = l1 - l2;
  CHECK(x * x.inverse() == RatFn(1));

  RatFn q = (l1 * l1 - l2 * l2) / (l1 - l2);
  CHECK(q == l1 + l2);
  CHECK(q.den() == MPoly(1));

  CHECK_THROWS_AS(l1 / RatFn(), DivisionByZero);
  CHECK_THROWS_AS(RatFn().inverse(), DivisionByZero);
}

TEST_CASE("canonical form and printing") {
  RatFn f = (m * m + m * l3) / (2 * l3 * l3);
  CHECK(to_string(f) == "(m^2 + m*l3) / (2*l3^2)");
  CHECK(to_string(m / l3) == "m/l3");
  CHECK(to_string(RatFn(Rational(-1, 2))) == "-1/2");
  CHECK(to_string(RatFn(Rational(1, 2)) * m) == "m/2");
  CHECK(to_string(RatFn(1) / (2 * l3 * l3)) == "1/(2*l3^2)");
  // Sign lives in the numerator.
  RatFn g = m / (-l3);
  CHECK(g.den() == MPoly::variable(Var::l3));
  CHECK(to_string(g) == "-m/l3");
  // Rational content is absorbed into integer coefficients.
  RatFn h = (RatFn(Rational(1, 3)) * m + l1) / (RatFn(Rational(2, 3)) * l3);
  CHECK(to_string(h) == "(m + 3*l1) / (2*l3)");
}

TEST_CASE("printed form parses back to the same value") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    RatFn f = random_ratfn(rng);
    CHECK(parse_ratfn(to_string(f)) == f);
  }
}

TEST_CASE("reduce_cy_relation examples") {
  CHECK(parse_ratfn("l0 + l1 + l2 + l3").is_zero());
  CHECK(parse_ratfn("l0") == -l1 - l2 - l3);
  CHECK(parse_ratfn("l0/l3 + 1") == -(l1 + l2) / l3);
  CHECK(to_string(parse_ratfn("l0/l3 + 1")) == "(-l1 - l2) / l3");
  CHECK_THROWS_AS(parse_ratfn("1/(l0 + l1 + l2 + l3)"), DivisionByZero);
  CHECK_THROWS_AS(parse_ratfn("l4"), ParseError);
  CHECK_THROWS_AS(parse_ratfn("(m"), ParseError);
  CHECK(parse_ratfn("m^-2") == RatFn(1) / (m * m));
  CHECK(parse_ratfn("(l1^2)^(-1)") == RatFn(1) / (l1 * l1));
}

TEST_CASE("eval_at examples") {
  CHECK((m / l3).eval({{Var::m, 2}, {Var::l3, 1}}) == 2);
  CHECK_THROWS_AS((RatFn(1) / (l1 - l2)).eval({{Var::l1, 1}, {Var::l2, 1}}), PoleAtPoint);
  RatFn f = (m * m + m * l3) / (2 * l3 * l3);
  CHECK(f.eval({{Var::m, 3}, {Var::l3, -1}}) == 3);
  CHECK_THROWS_AS((m / l3).eval({{Var::m, 2}}), InvalidInput);
}

TEST_CASE("substitution") {
  RatFn f = (m * m + m * l3) / (2 * l3 * l3);
  CHECK(f.substitute(Var::m, Rational(2)) == (4 + 2 * l3) / (2 * l3 * l3));
  CHECK(f.substitute(Var::m, -l3).is_zero());
  CHECK_THROWS_AS((m / (l3 - 1)).substitute(Var::l3, Rational(1)), PoleAtPoint);
}

TEST_CASE("polynomial ring axioms on random triples") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    MPoly a = random_mpoly(rng);
    MPoly b = random_mpoly(rng);
    MPoly c = random_mpoly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("exact division and gcd") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 150; ++i) {
    MPoly a = random_nonzero_mpoly(rng, 3, 2);
    MPoly b = random_nonzero_mpoly(rng, 3, 2);
    MPoly c = random_nonzero_mpoly(rng, 3, 2);
    auto q = divide_exact(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    MPoly g = gcd(a * c, b * c);
    // g is a multiple of c and divides both products.
    CHECK(divide_exact(g, c).has_value());
    CHECK(divide_exact(a * c, g).has_value());
    CHECK(divide_exact(b * c, g).has_value());
    // The cofactors are coprime.
    MPoly ga = *divide_exact(a * c, g);
    MPoly gb = *divide_exact(b * c, g);
    CHECK(gcd(ga, gb).is_constant());
  }
  MPoly x = MPoly::variable(Var::l1);
  MPoly y = MPoly::variable(Var::l2);
  CHECK_FALSE(divide_exact(x * x + y, x).has_value());
  CHECK(gcd(x * x - y * y, x * x + 2 * x * y + y * y) == x + y);
  CHECK(gcd(6 * x, 4 * x * y) == x);
  CHECK_THROWS_AS(divide_exact(x, MPoly()), DivisionByZero);
}

TEST_CASE("rational function field properties") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    RatFn a = random_ratfn(rng);
    RatFn b = random_ratfn(rng);
    RatFn c = random_ratfn(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(RatFn::make(a.num(), a.den()) == a);  // normalization is idempotent
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a - a == RatFn());
  }
}

TEST_CASE("reduced value agrees with raw evaluation") {
  std::mt19937_64 rng(4);
  const char* exprs[] = {"l0/l3 + 1", "(l0 - m)^2/(l1*l3 + l0)", "m*(m + l0)/(2*l0^2) - l2",
                         "(l0 + l1)/(l2 + l3)", "1/(l0 - 2*l3) + l0^3/(m + 1)"};
  std::uniform_int_distribution<long> pick(-6, 6);
  for (const char* text : exprs) {
    CyExpr e = CyExpr::parse(text);
    RatFn f = reduce_cy_relation(e);
    CHECK(e.mentions(Symbol::l0));
    for (int i = 0; i < 20; ++i) {
      Rational x1 = pick(rng), x2 = pick(rng), x3 = pick(rng), xm = pick(rng);
      SymbolPoint raw{{Symbol::l0, -(x1 + x2 + x3)}, {Symbol::l1, x1}, {Symbol::l2, x2},
                      {Symbol::l3, x3}, {Symbol::m, xm}};
      Assignment reduced{{Var::l1, x1}, {Var::l2, x2}, {Var::l3, x3}, {Var::m, xm}};
      Rational expected;
      try {
        expected = e.evaluate(raw);
      } catch (const PoleAtPoint&) {
        continue;
      }
      Rational got;
      try {
        got = f.eval(reduced);
      } catch (const PoleAtPoint&) {
        continue;  // removable singularity of the raw form
      }
      CHECK(got == expected);
    }
  }
}

TEST_CASE("factored sums agree with direct rational arithmetic") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<FactoredTerm> terms;
    RatFn direct;
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> nf(0, 3);
    std::uniform_int_distribution<int> ex(-2, 2);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
      FactoredTerm t(cy4::testing::random_rational(rng));
      RatFn r(t.scale());
      int k = nf(rng);
      for (int j = 0; j < k; ++j) {
        LinearForm f = random_linear_form(rng, trial % 2 == 1);
        int e = ex(rng);
        t.multiply(f, e);
        r *= pow(RatFn(f.to_mpoly()), e);
      }
      terms.push_back(t);
      direct += r;
    }
    CHECK(sum_factored(terms) == direct);
  }
}

TEST_CASE("factored terms cancel proportional forms") {
  FactoredTerm t;
  t.multiply(LinearForm::from_lambda(0, 0, 0, 2), 1);  // 2*l3
  t.multiply(LinearForm::from_lambda(0, 0, 0, -1), -1);  // 1/(-l3)
  CHECK(t.powers().empty());
  CHECK(t.scale() == -2);
  FactoredTerm z;
  z.multiply(LinearForm{}, 2);
  CHECK(z.is_zero());
  CHECK_THROWS_AS(FactoredTerm().multiply(LinearForm{}, -1), DivisionByZero);
  // lambda_0 + lambda_1 + lambda_2 + lambda_3 is the zero form.
  CHECK(LinearForm::from_lambda(1, 1, 1, 1).is_zero());
}

TEST_CASE("linear divisibility") {
  LinearForm f = LinearForm::from_lambda(0, 1, -1, 0);  // l1 - l2
  MPoly p = mul_linear(MPoly::variable(Var::m) + 3, f);
  CHECK(linear_divides(p, f));
  CHECK_FALSE(linear_divides(p + 1, f));
}
