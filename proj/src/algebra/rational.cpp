#include "cy4/algebra/rational.hpp"

#include <cctype>

#include "cy4/errors.hpp"

namespace cy4 {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational literal");
  std::string s(text);
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("malformed rational literal '" + s + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw ParseError("malformed rational literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("malformed rational literal '" + s + "'");
  if (r.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Rational ratio(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator in ratio");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Rational binomial(const Rational& r, unsigned long k) {
  Rational out = 1;
  for (unsigned long i = 0; i < k; ++i) {
    out *= (r - Rational(static_cast<long>(i)));
    out /= Rational(static_cast<long>(i + 1));
  }
  return out;
}

}  // namespace cy4
