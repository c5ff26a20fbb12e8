#pragma once

#include "eqlab/rational.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <optional>

namespace eqlab {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using MatQ = Mat<Rational>;

template <class Scalar>
struct PsdResult {
  bool is_psd = false;
  // Smallest pivot (exact) or smallest eigenvalue (float).
  Scalar min_value{};
};

// LDL^T with symmetric pivoting on the largest remaining diagonal entry.
PsdResult<Rational> psd_check_exact(const MatQ& m);
// Smallest eigenvalue of the symmetric matrix; PSD iff it is >= -tol.
PsdResult<double> psd_check_float(const Eigen::MatrixXd& m, double tol);

inline PsdResult<Rational> psd_check(const MatQ& m, double = 0.0) { return psd_check_exact(m); }
inline PsdResult<double> psd_check(const Eigen::MatrixXd& m, double tol) { return psd_check_float(m, tol); }

Eigen::MatrixXd to_double(const MatQ& m);

// Rows of the result are points in R^dim whose Gram matrix is g; empty if g has
// an eigenvalue below -tol or rank above dim.
std::optional<Eigen::MatrixXd> embed_gram(const Eigen::MatrixXd& g, int dim, double tol = 1e-9);

}  // namespace eqlab
