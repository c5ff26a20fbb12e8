#pragma once

#include "eqlab/bounds.hpp"
#include "eqlab/gegenbauer.hpp"
#include "eqlab/linalg.hpp"
#include "eqlab/sdpa.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqlab {

// Explicit solution of the degree-4 three-point program.
// a0_empty is indexed (empty, const); a0_e by (empty, 0, 1, 2); a1_e by (0, 1); a2_e by (0).
template <class Scalar>
struct CertificateMatrices {
  int n = 0;
  Scalar t{};
  Scalar p{};
  Mat<Scalar> a0_empty = Mat<Scalar>::Zero(2, 2);
  Mat<Scalar> a0_e = Mat<Scalar>::Zero(4, 4);
  Mat<Scalar> a1_e = Mat<Scalar>::Zero(2, 2);
  Mat<Scalar> a2_e = Mat<Scalar>::Zero(1, 1);

  std::vector<Mat<Scalar>> blocks() const { return {a0_empty, a0_e, a1_e, a2_e}; }
};

template <class Scalar>
CertificateMatrices<Scalar> build_certificate(int n, const Scalar& t) {
  if (n < 3) throw std::domain_error("build_certificate: n must be >= 3");
  if (t < Scalar(-1) || t > Scalar(0)) throw std::domain_error("build_certificate: t must lie in [-1, 0]");
  const Scalar one(1), two(2), N(n);
  const Scalar omt = one - t;
  const Scalar big = one + Scalar(7) * N - two * N * N * t * t * t * (two * N - one);
  if (omt == Scalar(0)) throw std::domain_error("build_certificate: vanishing denominator 1 - t");
  if (big == Scalar(0)) throw std::domain_error("build_certificate: vanishing denominator 1 + 7n - 2n^2 t^3 (2n - 1)");
  if (N * t * t + one == Scalar(0)) throw std::domain_error("build_certificate: vanishing denominator n t^2 + 1");

  CertificateMatrices<Scalar> c;
  c.n = n;
  c.t = t;
  c.p = p_value(n, t);
  const Scalar& p = c.p;
  const Scalar omt2 = omt * omt, omt3 = omt2 * omt;

  c.a0_empty(0, 0) = N * omt2 * p * p / (two * (N * t * t + one));
  c.a0_empty(0, 1) = c.a0_empty(1, 0) = -p / two;
  c.a0_empty(1, 1) = (N * t * t + one) / (two * N * omt2);

  auto set = [&](int i, int j, const Scalar& v) { c.a0_e(i, j) = c.a0_e(j, i) = v; };
  set(0, 0, p);
  set(0, 1, -one / (Scalar(4) * N * omt2) - t * t / omt2);
  set(0, 2, Scalar(3) * t / (two * omt2));
  set(0, 3, -Scalar(3) / (Scalar(4) * omt2));
  set(1, 1, one / (Scalar(4) * N * (N - one) * omt3) - t * t * t / (two * omt3));
  set(1, 2, Scalar(3) * t * t / (Scalar(4) * omt3));
  set(1, 3, -(N + one) / (Scalar(8) * N * (N - one) * omt3));
  set(2, 2, -Scalar(3) * t / (two * omt3));
  set(2, 3, Scalar(0));
  set(3, 3, (two * N - one) / (Scalar(4) * (N - one) * omt3));

  c.a1_e(1, 1) = (N + one) / (two * N * omt3);
  c.a2_e(0, 0) = (N - Scalar(2)) / (Scalar(4) * N * (N - one) * omt3);
  return c;
}

// Which arguments of a kernel are the empty set.
enum class ArgKind { empty, point };

template <class R, class Scalar>
R kernel_K_empty(const CertificateMatrices<Scalar>& c, ArgKind x, ArgKind y) {
  int i = x == ArgKind::empty ? 0 : 1, j = y == ArgKind::empty ? 0 : 1;
  return R(c.a0_empty(i, j));
}

// u = e.x, v = e.y, s = x.y; u (v) is ignored when x (y) is empty.
template <class R, class Scalar>
R kernel_K_e(const CertificateMatrices<Scalar>& c, const R& u, const R& v, const R& s, ArgKind x, ArgKind y) {
  if (x == ArgKind::empty && y == ArgKind::empty) return R(c.a0_e(0, 0));
  if (x == ArgKind::empty) return R(c.a0_e(0, 1)) + R(c.a0_e(0, 2)) * v + R(c.a0_e(0, 3)) * v * v;
  if (y == ArgKind::empty) return R(c.a0_e(1, 0)) + R(c.a0_e(2, 0)) * u + R(c.a0_e(3, 0)) * u * u;
  const R pu[3] = {R(1), u, u * u};
  const R pv[3] = {R(1), v, v * v};
  R acc(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (c.a0_e(i + 1, j + 1) != Scalar(0)) acc = acc + R(c.a0_e(i + 1, j + 1)) * pu[i] * pv[j];
  R q1 = q_eval(1, c.n, u, v, s);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (c.a1_e(i, j) != Scalar(0)) acc = acc + R(c.a1_e(i, j)) * pu[i] * pv[j] * q1;
  if (c.a2_e(0, 0) != Scalar(0)) acc = acc + R(c.a2_e(0, 0)) * q_eval(2, c.n, u, v, s);
  return acc;
}

// (B_3 A)(I) for |I| = m <= 3. gram(i, j) is the inner product of points i and j
// (gram(i, i) should be 1).
template <class R, class Scalar, class Gram>
R b3a_eval(const CertificateMatrices<Scalar>& c, int m, const Gram& gram) {
  if (m < 0 || m > 3) throw std::invalid_argument("b3a_eval: set size must be 0..3");
  const int full = (1 << m) - 1;
  R acc(0);
  // -1 encodes the empty set.
  for (int S = -1; S < m; ++S)
    for (int T = -1; T < m; ++T)
      for (int Q = -1; Q < m; ++Q) {
        int cover = (S >= 0 ? 1 << S : 0) | (T >= 0 ? 1 << T : 0) | (Q >= 0 ? 1 << Q : 0);
        if (cover != full) continue;
        ArgKind ks = S < 0 ? ArgKind::empty : ArgKind::point;
        ArgKind kt = T < 0 ? ArgKind::empty : ArgKind::point;
        if (Q < 0) {
          acc = acc + kernel_K_empty<R>(c, ks, kt);
          continue;
        }
        R u = S >= 0 ? R(gram(S, Q)) : R(0);
        R v = T >= 0 ? R(gram(T, Q)) : R(0);
        R s = (S >= 0 && T >= 0) ? R(gram(S, T)) : R(0);
        acc = acc + kernel_K_e<R>(c, u, v, s, ks, kt);
      }
  return acc;
}

// Convenience wrappers: pair with x.y = s; triple with (u, v, s) = (x.z, y.z, x.y).
template <class R, class Scalar>
R b3a_pair(const CertificateMatrices<Scalar>& c, const R& s) {
  return b3a_eval<R>(c, 2, [&](int i, int j) { return i == j ? R(1) : s; });
}
template <class R, class Scalar>
R b3a_triple(const CertificateMatrices<Scalar>& c, const R& u, const R& v, const R& s) {
  // points: 0 = x, 1 = y, 2 = z
  return b3a_eval<R>(c, 3, [&](int i, int j) {
    if (i == j) return R(1);
    int a = std::min(i, j), b = std::max(i, j);
    if (a == 0 && b == 1) return s;
    if (a == 0 && b == 2) return u;
    return v;
  });
}

struct IdentityReport {
  int n = 0;
  std::string t_text;
  bool exact_mode = false;
  int samples = 0;
  double max_abs_error_singleton = 0.0;
  double max_abs_error_pair = 0.0;
  double max_abs_error_triple = 0.0;
  std::vector<double> psd_min_eigenvalues;       // per block, float
  std::vector<std::string> psd_min_pivots;       // per block, exact mode only
  std::vector<bool> psd_ok;                      // per block
  double objective = 0.0;                        // (B_3 A)(empty)
  std::string objective_exact;
  bool objective_matches_bound = false;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

IdentityReport verify_certificate(int n, const Rational& t, int samples, double tol, bool exact,
                                  unsigned seed = 12345);
IdentityReport verify_certificate(int n, double t, int samples, double tol, unsigned seed = 12345);

// The three identities as exact trivariate polynomials (difference from the target).
struct ExactIdentityDefects {
  Rational singleton;  // b3a(x) + 1
  TriPoly pair;        // b3a(x, y) as a polynomial in s
  TriPoly triple;      // b3a(x, y, z) - 3(t-u)(t-v)(t-s)/(t-1)^3
};
ExactIdentityDefects exact_identity_defects(const CertificateMatrices<Rational>& c);

// Variables are the upper-triangle entries of the four blocks (17 in total).
struct SampledSdp {
  SdpProblem problem;
  std::vector<double> certificate_point;  // the explicit solution as a variable vector
};
SampledSdp sampled_sdp(int n, double t, int pair_grid, int triple_grid);
void export_sampled_sdp(int n, double t, int pair_grid, int triple_grid, const std::filesystem::path& path);

}  // namespace eqlab
