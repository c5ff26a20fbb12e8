#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <type_traits>
#include <string_view>

namespace eqlab {

// Expression templates are off so the type behaves like a plain value inside Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// Accepts "p/q", integers and plain decimals ("-0.37" is read as -37/100).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

// Exact rational value of a binary64.
Rational exact_rational(double x);
// Smallest-denominator rational within tol of x (denominator <= 10^7), else exact_rational(x).
Rational snap_rational(double x, double tol = 1e-12);

Integer floor(const Rational& r);

int sign(const Rational& r);

template <class Scalar>
Scalar from_rational(const Rational& r) {
  if constexpr (std::is_floating_point_v<Scalar>)
    return static_cast<Scalar>(to_double(r));
  else
    return Scalar(r);
}

template <class Scalar>
Scalar from_int(long long v) {
  return Scalar(v);
}

}  // namespace eqlab
