#include "cubesec/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace cubesec {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational binomial(unsigned long n, unsigned long i) {
  if (i > n) return Rational(0);
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), n, i);
  return Rational(c);
}

Rational pow(const Rational& base, unsigned long exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational pow10(int exponent) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  if (exponent >= 0) return Rational(p);
  Rational r(BigInt(1), p);
  return r;
}

int sign(const Rational& x) { return sgn(x); }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("from_double: non-finite value");
  return Rational(x);
}

double to_double(const Rational& x) { return x.get_d(); }

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
  }
  // Base 10 explicitly: base 0 would read a leading zero as octal.
  return BigInt(std::string(digits), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  int exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    BigInt mag = parse_integer(exp_part, whole);
    if (mag > 4000) throw std::invalid_argument("exponent out of range: '" + std::string(whole) + "'");
    exponent = static_cast<int>(mag.get_si()) * (exp_negative ? -1 : 1);
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<int>(frac_part.size());
  } else {
    digits = std::string(text);
  }
  Rational r(parse_integer(digits, whole));
  r *= pow10(exponent);
  if (negative) r = -r;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trim(s.substr(0, slash)), text);
    Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(num / den);
  }
  return parse_decimal(s, text);
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return Rational(-simplest_between(-hi, -lo));

  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  Rational ceiling(BigInt(fl + 1));
  if (ceiling <= hi) return ceiling;
  // No integer in [lo, hi]: both share the integer part fl.
  Rational inner = simplest_between(Rational(1 / (hi - fl)), Rational(1 / (lo - fl)));
  return Rational(fl + 1 / inner);
}

SqrtBounds sqrt_bounds(unsigned long n, unsigned long bits) {
  // floor(sqrt(n * 4^bits)) / 2^bits is within 2^-bits below sqrt(n).
  BigInt scaled(n);
  scaled <<= 2 * bits;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  BigInt den(1);
  den <<= bits;
  SqrtBounds b;
  b.lo = Rational(root, den);
  b.lo.canonicalize();
  if (root * root == scaled) {
    b.hi = b.lo;
  } else {
    b.hi = Rational(BigInt(root + 1), den);
    b.hi.canonicalize();
  }
  return b;
}

bool is_perfect_square(unsigned long n, unsigned long* root) {
  BigInt r;
  BigInt nn(n);
  mpz_sqrt(r.get_mpz_t(), nn.get_mpz_t());
  if (r * r != nn) return false;
  if (root) *root = r.get_ui();
  return true;
}

}  // namespace cubesec
