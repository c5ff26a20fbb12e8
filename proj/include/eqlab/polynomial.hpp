#pragma once

#include "eqlab/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eqlab {

// Dense univariate polynomial over the rationals, coefficients in ascending degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly x() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;

  template <class T>
  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + from_rational<T>(*it);
    return acc;
  }
  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return (*this)(x).sign(); }

  UniPoly derivative() const;
  UniPoly monic() const;
  // p(q(x))
  UniPoly compose(const UniPoly& q) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder with deg(r) < deg(b).
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd (zero if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly square_free_part(const UniPoly& p);
// Yun decomposition: result[i] is the product of the factors of multiplicity i + 1.
std::vector<UniPoly> square_free_decomposition(const UniPoly& p);

std::vector<UniPoly> sturm_sequence(const UniPoly& p);
int sign_variations(const std::vector<UniPoly>& seq, const Rational& x);
// Number of distinct real roots in the half-open interval (a, b].
int sturm_count(const std::vector<UniPoly>& seq, const Rational& a, const Rational& b);

struct IsolatedRoot {
  Rational lo, hi;  // lo == hi marks an exact rational root
  double approx = 0.0;
  int multiplicity = 1;
  UniPoly factor;  // square-free polynomial with exactly one root in [lo, hi]
};

struct RootSet {
  std::vector<IsolatedRoot> roots;  // increasing
  std::size_t size() const { return roots.size(); }
  const IsolatedRoot& operator[](std::size_t i) const { return roots[i]; }
};

// All real roots of p in the closed interval [lo, hi], each isolated to width <= precision.
RootSet isolate_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                           const Rational& precision);

// Real algebraic number: an exact rational or the unique root of a square-free
// polynomial inside an open interval whose endpoints are not roots.
class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(const Rational& r) : exact_(r), lo_(r), hi_(r) {}
  AlgebraicNumber(int v) : AlgebraicNumber(Rational(v)) {}
  static AlgebraicNumber from_root(const IsolatedRoot& root);
  // Root of p isolated in (lo, hi); p must change sign across the interval.
  static AlgebraicNumber from_interval(const UniPoly& p, const Rational& lo, const Rational& hi);

  bool is_rational() const { return exact_.has_value(); }
  const Rational& rational() const { return *exact_; }
  const UniPoly& polynomial() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  double to_double() const;
  // Isolating interval refined to width <= w (the value itself is unchanged).
  std::pair<Rational, Rational> interval(const Rational& w) const;
  // Sign of q(value) for an arbitrary rational polynomial q.
  int sign_of(const UniPoly& q) const;

  const std::string& name() const { return name_; }
  AlgebraicNumber named(std::string n) const {
    AlgebraicNumber a = *this;
    a.name_ = std::move(n);
    return a;
  }
  std::string str() const;

  friend int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend int compare(const AlgebraicNumber& a, const Rational& b);
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) == 0; }
  friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) != 0; }
  friend bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; }
  friend bool operator<=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) <= 0; }
  friend bool operator>(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) > 0; }
  friend bool operator>=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) >= 0; }

 private:
  std::optional<Rational> exact_;
  UniPoly poly_;
  Rational lo_, hi_;
  std::string name_;
};

// A rational strictly between a < b.
Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b);

// Families of polynomials in t whose coefficients are polynomials in a parameter k,
// entry j is the coefficient of t^j.
using ParamFamily = std::vector<UniPoly>;
UniPoly specialize(const ParamFamily& family, const Rational& k);

ParamFamily moser_spindle_family();
ParamFamily spindle_quartic_family();   // f
ParamFamily spindle_cubic_family();     // g

UniPoly moser_spindle_polynomial(int k);
UniPoly spindle_quartic(int k);
UniPoly spindle_cubic(int k);

// i-th root (1-based, increasing) of the Moser spindle polynomial for k, named "t_k_i".
AlgebraicNumber moser_root(int k, int i);
std::optional<AlgebraicNumber> parse_root_handle(std::string_view handle);
// Rational, decimal, or a root handle such as "t_2_1".
AlgebraicNumber parse_real(std::string_view text);

}  // namespace eqlab
