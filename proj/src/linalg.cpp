#include "eqlab/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace eqlab {

PsdResult<Rational> psd_check_exact(const MatQ& input) {
  MatQ a = input;
  const Eigen::Index n = a.rows();
  PsdResult<Rational> res;
  res.is_psd = true;
  bool have_pivot = false;
  std::vector<Eigen::Index> alive(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) alive[static_cast<size_t>(i)] = i;

  while (!alive.empty()) {
    auto best = std::max_element(alive.begin(), alive.end(),
                                 [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });
    Eigen::Index k = *best;
    Rational d = a(k, k);
    if (d < 0) {
      res.is_psd = false;
      res.min_value = d;
      return res;
    }
    if (d == 0) {
      // A zero diagonal forces its whole row to vanish in a PSD matrix.
      for (auto i : alive)
        for (auto j : alive)
          if (a(i, j) != 0) {
            res.is_psd = false;
            res.min_value = -abs(a(i, j));
            return res;
          }
      if (!have_pivot || res.min_value > 0) res.min_value = 0;
      return res;
    }
    if (!have_pivot || d < res.min_value) res.min_value = d;
    have_pivot = true;
    alive.erase(best);
    for (auto i : alive) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / d;
      for (auto j : alive) a(i, j) -= f * a(k, j);
    }
  }
  return res;
}

PsdResult<double> psd_check_float(const Eigen::MatrixXd& m, double tol) {
  PsdResult<double> res;
  if (m.size() == 0) {
    res.is_psd = true;
    return res;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  res.min_value = es.eigenvalues().minCoeff();
  res.is_psd = res.min_value >= -tol;
  return res;
}

Eigen::MatrixXd to_double(const MatQ& m) {
  Eigen::MatrixXd r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = eqlab::to_double(m(i, j));
  return r;
}

std::optional<Eigen::MatrixXd> embed_gram(const Eigen::MatrixXd& g, int dim, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  const auto& ev = es.eigenvalues();
  const Eigen::Index m = g.rows();
  if (m == 0) return Eigen::MatrixXd(0, dim);
  if (ev.minCoeff() < -tol) return std::nullopt;
  Eigen::Index positive = 0;
  for (Eigen::Index i = 0; i < m; ++i)
    if (ev(i) > tol) ++positive;
  if (positive > dim) return std::nullopt;
  Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(m, dim);
  // Eigenvalues ascend; keep the top ones.
  for (int c = 0; c < std::min<Eigen::Index>(dim, m); ++c) {
    Eigen::Index idx = m - 1 - c;
    double lam = std::max(0.0, ev(idx));
    pts.col(c) = es.eigenvectors().col(idx) * std::sqrt(lam);
  }
  return pts;
}

}  // namespace eqlab
