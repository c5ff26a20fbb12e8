#pragma once

#include "eqlab/geometry.hpp"
#include "eqlab/graph.hpp"
#include "eqlab/linalg.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqlab {

// B = U - tJ - (1-t)I
template <class Scalar>
Mat<Scalar> b_matrix(const Mat<Scalar>& u, const Scalar& t) {
  if (u.rows() != u.cols()) throw std::invalid_argument("b_matrix: U must be square");
  Mat<Scalar> b = u;
  const Scalar one(1);
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j) b(i, j) = u(i, j) - t - (i == j ? one - t : Scalar(0));
  return b;
}

struct SpectralReport {
  double t = 0;
  double threshold = 1e-8;
  // Ascending.
  std::vector<double> u_eigenvalues, c_eigenvalues, b_eigenvalues;
  int rank_u = 0, rank_c = 0, rank_b = 0;
  double trace_b = 0, trace_b3 = 0;
  bool e_in_kernel = false;
  double barycenter_norm = 0;  // |sum x_i| = sqrt(e^T U e)
};

// Rank counts eigenvalues above threshold * max|eigenvalue|.
SpectralReport spectral_report(const Eigen::MatrixXd& u, double t, double threshold = 1e-8);

// O = n/(n+1) U + 1/(n+1) J - I
template <class Scalar>
Mat<Scalar> to_o_matrix(const Mat<Scalar>& u, int n) {
  if (n < 1) throw std::invalid_argument("to_o_matrix: n must be >= 1");
  if (u.rows() != u.cols() || u.rows() != 2 * (n + 1))
    throw std::invalid_argument("to_o_matrix: U must be " + std::to_string(2 * (n + 1)) + "x" +
                                std::to_string(2 * (n + 1)));
  const Scalar a = Scalar(n) / Scalar(n + 1), c = Scalar(1) / Scalar(n + 1);
  Mat<Scalar> o(u.rows(), u.cols());
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j) o(i, j) = a * u(i, j) + c - (i == j ? Scalar(1) : Scalar(0));
  return o;
}

// U = (1 + 1/n) O - (1/n) J + (1 + 1/n) I
template <class Scalar>
Mat<Scalar> gram_from_o_matrix(const Mat<Scalar>& o, int n) {
  if (n < 1) throw std::invalid_argument("gram_from_o_matrix: n must be >= 1");
  if (o.rows() != o.cols() || o.rows() != 2 * (n + 1))
    throw std::invalid_argument("gram_from_o_matrix: O must be " + std::to_string(2 * (n + 1)) + "x" +
                                std::to_string(2 * (n + 1)));
  const Scalar a = Scalar(1) + Scalar(1) / Scalar(n), c = Scalar(1) / Scalar(n);
  Mat<Scalar> u(o.rows(), o.cols());
  for (Eigen::Index i = 0; i < o.rows(); ++i)
    for (Eigen::Index j = 0; j < o.cols(); ++j) u(i, j) = a * o(i, j) - c + (i == j ? a : Scalar(0));
  return u;
}

// Almost-orthogonal form for 2n points at t = 0: O = U - I. Lifting a (-1/n)-set
// one dimension up turns to_o_matrix into this.
template <class Scalar>
Mat<Scalar> almost_orthogonal_o_matrix(const Mat<Scalar>& u) {
  if (u.rows() != u.cols() || u.rows() % 2 != 0)
    throw std::invalid_argument("almost_orthogonal_o_matrix: U must be square of even size");
  Mat<Scalar> o = u;
  for (Eigen::Index i = 0; i < u.rows(); ++i) o(i, i) = u(i, i) - Scalar(1);
  return o;
}

struct OMatrixCheck {
  bool symmetric = false, orthogonal = false, fixes_e = false, zero_diagonal = false, triple_products_zero = false;
  double max_asymmetry = 0, max_orthogonality_defect = 0, max_oe_defect = 0, max_diagonal = 0, max_triple_product = 0;
  // First (i, j, k) with a nonzero triple product.
  std::optional<std::array<int, 3>> triple_witness;
  bool passed() const { return symmetric && orthogonal && fixes_e && zero_diagonal && triple_products_zero; }
};

template <class Scalar>
OMatrixCheck o_matrix_check(const Mat<Scalar>& o, double tol = 1e-10) {
  if (o.rows() != o.cols()) throw std::invalid_argument("o_matrix_check: O must be square");
  auto mag = [](const Scalar& x) { return std::abs(to_double(x)); };
  const Eigen::Index m = o.rows();
  OMatrixCheck r;
  Mat<Scalar> sq = o * o;
  for (Eigen::Index i = 0; i < m; ++i) {
    Scalar row(0);
    for (Eigen::Index j = 0; j < m; ++j) {
      row += o(i, j);
      r.max_asymmetry = std::max(r.max_asymmetry, mag(o(i, j) - o(j, i)));
      r.max_orthogonality_defect = std::max(r.max_orthogonality_defect, mag(sq(i, j) - Scalar(i == j ? 1 : 0)));
    }
    r.max_oe_defect = std::max(r.max_oe_defect, mag(row - Scalar(1)));
    r.max_diagonal = std::max(r.max_diagonal, mag(o(i, i)));
  }
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      for (Eigen::Index k = 0; k < m; ++k) {
        if (i == j || j == k || i == k) continue;
        double v = mag(o(i, j) * o(j, k) * o(k, i));
        if (v > r.max_triple_product) r.max_triple_product = v;
        if (v > tol && !r.triple_witness) r.triple_witness = {int(i), int(j), int(k)};
      }
  r.symmetric = r.max_asymmetry <= tol;
  r.orthogonal = r.max_orthogonality_defect <= tol;
  r.fixes_e = r.max_oe_defect <= tol;
  r.zero_diagonal = r.max_diagonal <= tol;
  r.triple_products_zero = r.max_triple_product <= tol;
  return r;
}

// Rows are points in R^dim taken from the dim leading eigenpairs of U.
// Throws std::runtime_error if U has a negative eigenvalue below -tol.
UnitConfig factor_gram(const Eigen::MatrixXd& u, int dim, double tol = 1e-9);

struct FromOResult {
  Eigen::MatrixXd gram;
  UnitConfig config;
  int rank = 0;
  bool distinct = false;             // no two points coincide
  bool almost_equiangular = false;   // at t = -1/n
};

// Factorizes U from its n leading eigenpairs. Throws std::runtime_error if rank(U) != n.
FromOResult from_o_matrix(const Eigen::MatrixXd& o, int n, double tol = 1e-9);

struct TwoDesignReport {
  bool is_2design = false;
  double barycenter_defect = 0;  // max |(sum x_k)_i|
  double moment_defect = 0;      // max |(sum x_k x_k^T - (m/n) I)_ij|
};

// Sum x_k = 0 and sum x_k x_k^T = (m/n) I.
TwoDesignReport two_design_check(const UnitConfig& cfg, double tol = 1e-10);

struct MaximumSetGraphReport {
  bool contains_k_n1 = false;
  bool complement_quadrangular = false;
  // Two vertices with exactly one common neighbour in the complement.
  std::optional<std::pair<int, int>> quadrangular_witness;
  int min_complement_degree = 0, max_complement_degree = 0;
  bool complement_degrees_in_range = false;  // within [1, n+1]
};

MaximumSetGraphReport maximum_set_graph_checks(const SimpleGraph& g, int n);

}  // namespace eqlab
