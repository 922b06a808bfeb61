#include <doctest.h>

#include <random>

#include "cy4/characters.hpp"
#include "cy4/errors.hpp"

using namespace cy4;

namespace {

TChar t(int i, int power = 1) { return TChar::monomial(torus_weight(i, power)); }

TChar random_tchar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> w(-2, 2);
  std::uniform_int_distribution<long> mult(-2, 2);
  std::uniform_int_distribution<int> len(0, 4);
  TChar c;
  int n = len(rng);
  for (int i = 0; i < n; ++i) c += TChar::monomial({w(rng), w(rng), w(rng), w(rng)}, mult(rng));
  return c;
}

// chi(O(pZ_inf + qZ_0)) from chi(O) = 1 and the twists by Z_0 and Z_inf, whose
// fibres at the fixed points carry t0^{-q-1} and t0^{p+1}.
TChar chi_by_recurrence(int p, int q) {
  TChar c = TChar::monomial({});
  for (int j = 0; j < q; ++j) c += t(0, -j - 1);
  for (int j = 0; j > q; --j) c -= t(0, -j);
  for (int i = 0; i < p; ++i) c += t(0, i + 1);
  for (int i = 0; i > p; --i) c -= t(0, i);
  return c;
}

const RatFn l1 = RatFn::variable(Var::l1);
const RatFn l2 = RatFn::variable(Var::l2);
const RatFn l3 = RatFn::variable(Var::l3);
const RatFn m = RatFn::variable(Var::m);

}  // namespace

TEST_CASE("weights live modulo the diagonal") {
  CHECK(TChar::monomial({1, 1, 1, 1}) == TChar::monomial({}));
  CHECK(TChar::monomial({1, 1, 1, 1}).fixed_part() == 1);
  CHECK(TChar::monomial({3, 0, 1, 5}) == TChar::monomial({0, -3, -2, 2}));
  CHECK((t(0) * t(1) * t(2) * t(3)).fixed_part() == 1);
}

TEST_CASE("chi_p1 examples") {
  CHECK(chi_p1(0, 0) == TChar::monomial({}));
  CHECK(chi_p1(2, 0) == TChar::monomial({}) + t(0) + t(0, 2));
  CHECK(chi_p1(0, -2) == -t(0));
  CHECK(chi_p1(-1, 0).is_zero());
  CHECK(chi_p1(1, 1) == t(0, -1) + TChar::monomial({}) + t(0));
}

TEST_CASE("chi_p1 matches the twisting recurrence") {
  for (int p = -5; p <= 5; ++p) {
    for (int q = -5; q <= 5; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      CHECK(chi_p1(p, q) == chi_by_recurrence(p, q));
      CHECK(chi_p1(p, q + 1) - chi_p1(p, q) == t(0, -q - 1));
    }
  }
}

TEST_CASE("chi_p1 dimension") {
  for (int d = -6; d <= 6; ++d) CHECK(chi_p1(d, 0).rank() == d + 1);
}

TEST_CASE("bar is a ring involution") {
  std::mt19937_64 rng(7);
  CHECK(bar(TChar::monomial({1, 0, 0, 2})) == TChar::monomial({-1, 0, 0, -2}));
  CHECK(bar(TChar()).is_zero());
  for (int i = 0; i < 200; ++i) {
    TChar a = random_tchar(rng);
    TChar b = random_tchar(rng);
    CHECK(bar(bar(a)) == a);
    CHECK(bar(a + b) == bar(a) + bar(b));
    CHECK(bar(a * b) == bar(a) * bar(b));
    CHECK((a * b) * a == a * (b * a));
  }
}

TEST_CASE("koszul examples") {
  P1Sheaf o{{0, 0, {}, 1}};
  CHECK(koszul_chi_hom(o, o, {}) == TChar::monomial({}));

  // O(-1) normal direction twisted by t1^-1: chi(O(-1)) = 0 kills the correction.
  std::vector<NormalLine> n1{{-1, 0, torus_weight(1, -1)}};
  CHECK(koszul_chi_hom(o, o, n1) == TChar::monomial({}));

  std::vector<NormalLine> n2{{1, 0, torus_weight(1, 1)}};
  CHECK(koszul_chi_hom(o, o, n2) == TChar::monomial({}) - (TChar::monomial({}) + t(0)) * t(1));

  // Both factors of the tensor product see the twists.
  P1Sheaf a{{1, 0, torus_weight(3, 1), 1}};
  P1Sheaf b{{0, 1, torus_weight(2, 1), 2}};
  CHECK(koszul_chi_hom(a, b, {}) == chi_p1(-1, 1) * t(2) * t(3, -1) * 2);
}

TEST_CASE("euler class examples") {
  CHECK(euler_class(t(3)) == l3);
  CHECK(euler_class(t(3, 2), Insertion::symbolic()) == m + 2 * l3);
  CHECK(euler_class(t(0) - t(1)) == (-l1 - l2 - l3) / l1);
  CHECK(to_string(euler_class(t(0) - t(1))) == "(-l1 - l2 - l3) / l1");
  CHECK(euler_class(TChar()) == RatFn(1));
  CHECK(euler_class(t(3, 2), Insertion::at(3)) == 3 + 2 * l3);
  CHECK_THROWS_AS(euler_class(TChar::monomial({}) + t(1)), ZeroWeight);
  CHECK_THROWS_AS(euler_class(-TChar::monomial({}), Insertion::at(0)), ZeroWeight);
  CHECK(euler_class(TChar::monomial({}, 2), Insertion::at(0)).is_zero());
  CHECK(euler_class(TChar::monomial({}, 2), Insertion::symbolic()) == m * m);
}

TEST_CASE("euler class is multiplicative") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    TChar a = random_tchar(rng);
    TChar b = random_tchar(rng);
    if (a.fixed_part() != 0 || b.fixed_part() != 0) continue;
    CHECK(euler_class(a + b) == euler_class(a) * euler_class(b));
    CHECK(euler_class(a - a) == RatFn(1));
    ++checked;
  }
  CHECK(checked > 50);
}
