#pragma once

#include "eqlab/polynomial.hpp"
#include "eqlab/rational.hpp"

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqlab {

template <class Scalar>
Scalar p_value(int n, const Scalar& t) {
  const Scalar N(n), one(1), two(2);
  Scalar t2 = t * t, t3 = t2 * t, t4 = t3 * t;
  Scalar num = Scalar(8) * N * N * t4 * (two * N - one) - Scalar(9) * N * N * t3 * (N - one) +
               (two * N * t2 - Scalar(3) * t + Scalar(4)) * (Scalar(7) * N + one);
  Scalar den = two * (one - t) * (one + Scalar(7) * N - two * N * N * t3 * (two * N - one));
  return num / den;
}

template <class Scalar>
Scalar f_value(int n, const Scalar& t) {
  const Scalar N(n), one(1);
  Scalar p = p_value(n, t);
  return p * p * N * (one - t) * (one - t) / (Scalar(2) * (N * t * t + one));
}

// Limit of f(n, t) as n grows; +inf at t = 0.
double asymptotic_value(double t);

struct BoundReport {
  int n = 0;
  std::string t_text;
  double t = 0.0;
  bool exact = false;  // p and f computed in rational arithmetic
  std::optional<Rational> p_exact, f_exact;
  bool analytic_applies = false;  // the analytic bound needs n >= 3
  double p = 0.0, f = 0.0;
  long long floor_f = 0;
  // Two entries when a float f lies within 1e-9 of an integer.
  std::vector<long long> floor_candidates;
  double asymptotic = std::numeric_limits<double>::infinity();
  int spectral_cap = 0;
  Rational spectral_equality_point;
  bool spectral_equality_possible = false;
  long long best_upper = 0;
  std::string active_bound;  // "analytic", "spectral" or "both"
};

BoundReport analytic_bound(int n, const Rational& t);
// Irrational t falls back to binary64 with a 1e-12 slack before flooring.
BoundReport analytic_bound(int n, const AlgebraicNumber& t);

struct SpectralCap {
  int cap = 0;
  Rational equality_only_at;
};
SpectralCap spectral_cap(int n, double t);
SpectralCap spectral_cap(int n, const AlgebraicNumber& t);

// Minimum of the analytic floor (n >= 3) and the spectral cap.
BoundReport best_upper_bound(int n, const AlgebraicNumber& t);

struct Construction {
  std::string name;
  int size = 0;
};
// Constructions realizable at (n, t), largest first.
std::vector<Construction> lower_bound_constructions(int n, const AlgebraicNumber& t);

}  // namespace eqlab
