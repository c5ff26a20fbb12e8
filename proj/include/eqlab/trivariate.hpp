#pragma once

#include "eqlab/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace eqlab {

// Sparse polynomial in (u, v, s) with rational coefficients. Also serves as a
// ring scalar so identities can be evaluated symbolically.
class TriPoly {
 public:
  using Exponent = std::array<int, 3>;

  TriPoly() = default;
  TriPoly(const Rational& c);
  TriPoly(long c) : TriPoly(Rational(c)) {}
  static TriPoly u() { return var(0); }
  static TriPoly v() { return var(1); }
  static TriPoly s() { return var(2); }
  static TriPoly var(int i);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Largest exponent of variable i (-1 for the zero polynomial).
  int degree_in(int i) const;
  int total_degree() const;
  Rational coeff(const Exponent& e) const;
  Rational max_abs_coeff() const;

  template <class T>
  T operator()(const T& u, const T& v, const T& s) const {
    T acc(0);
    for (const auto& [e, c] : terms_) {
      T m = from_rational<T>(c);
      for (int k = 0; k < e[0]; ++k) m = m * u;
      for (int k = 0; k < e[1]; ++k) m = m * v;
      for (int k = 0; k < e[2]; ++k) m = m * s;
      acc = acc + m;
    }
    return acc;
  }

  TriPoly swap_uv() const;

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly& operator*=(const TriPoly& o) { return *this = *this * o; }
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator-(const TriPoly& a);
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator/(const TriPoly& a, const Rational& b);
  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  std::map<Exponent, Rational> terms_;
};

TriPoly pow(const TriPoly& p, int e);

}  // namespace eqlab
