#include "eqlab/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace eqlab {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  bool neg = s[0] == '-';
  if (s[0] == '+' || s[0] == '-') s.remove_prefix(1);
  auto nz = s.find_first_not_of('0');
  Integer v(nz == std::string_view::npos ? std::string("0") : std::string(s.substr(nz)));
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  auto dot = text.find('.');
  auto exp_pos = text.find_first_of("eE");
  if (dot == std::string_view::npos && exp_pos == std::string_view::npos)
    return Rational(parse_integer(text));

  std::string_view mant = text.substr(0, exp_pos);
  long exponent = 0;
  if (exp_pos != std::string_view::npos) {
    auto e = text.substr(exp_pos + 1);
    if (!valid_integer(e)) throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
    exponent = std::stol(std::string(e));
  }
  std::string digits;
  bool negative = false;
  size_t i = 0;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    negative = mant[0] == '-';
    i = 1;
  }
  bool seen_dot = false;
  for (; i < mant.size(); ++i) {
    char c = mant[i];
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_dot) --exponent;
    } else {
      throw std::invalid_argument("bad number '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad number '" + std::string(text) + "'");
  // Leading zeros would select an octal parse.
  auto nz = digits.find_first_not_of('0');
  digits = nz == std::string::npos ? "0" : digits.substr(nz);
  Rational r{Integer(digits)};
  Rational ten(10);
  for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) r = exponent < 0 ? r / ten : r * ten;
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  return r.str();
}

Rational exact_rational(double x) {
  return Rational(x);
}

Rational snap_rational(double x, double tol) {
  if (!std::isfinite(x)) throw std::domain_error("snap_rational: non-finite input");
  // Convergents of the continued fraction of x.
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rem = x;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(rem);
    if (std::abs(a) > 1e12) break;
    long long ai = static_cast<long long>(a);
    long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > 10000000) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= tol) return Rational(h1) / Rational(k1);
    double frac = rem - a;
    if (frac == 0) break;
    rem = 1.0 / frac;
  }
  return exact_rational(x);
}

Integer floor(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

int sign(const Rational& r) {
  return r.sign();
}

}  // namespace eqlab
