#pragma once

#include "eqlab/polynomial.hpp"
#include "eqlab/trivariate.hpp"

#include <stdexcept>

namespace eqlab {

// Gegenbauer polynomial for S^{n-1}, normalized to P_k^n(1) = 1.
template <class Scalar>
Scalar jacobi_eval(int k, int n, const Scalar& x) {
  if (n < 2) throw std::domain_error("jacobi_eval: n must be >= 2");
  if (k < 0) throw std::domain_error("jacobi_eval: k must be >= 0");
  Scalar prev(1);
  if (k == 0) return prev;
  Scalar cur = x;
  for (int j = 1; j < k; ++j) {
    Scalar next = (Scalar(2 * j + n - 2) * x * cur - Scalar(j) * prev) / Scalar(j + n - 2);
    prev = cur;
    cur = next;
  }
  return cur;
}

// Exact coefficients of P_k^n.
UniPoly gegenbauer_poly(int k, int n);

// Q_k^n(u, v, s) in expanded form; computed once per (k, n) and cached.
const TriPoly& q_poly(int k, int n);

template <class Scalar>
Scalar q_eval(int k, int n, const Scalar& u, const Scalar& v, const Scalar& s) {
  if (n < 3) throw std::domain_error("q_eval: n must be >= 3");
  return q_poly(k, n)(u, v, s);
}

}  // namespace eqlab
