#include "eqlab/spectral.hpp"

#include <algorithm>

namespace eqlab {

namespace {

std::vector<double> eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
  const auto& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

int rank_of(const std::vector<double>& eigs, double threshold) {
  double top = 0;
  for (double e : eigs) top = std::max(top, std::abs(e));
  int r = 0;
  for (double e : eigs) r += std::abs(e) > threshold * top;
  return r;
}

}  // namespace

SpectralReport spectral_report(const Eigen::MatrixXd& u, double t, double threshold) {
  if (u.rows() != u.cols()) throw std::invalid_argument("spectral_report: U must be square");
  const Eigen::Index m = u.rows();
  SpectralReport r;
  r.t = t;
  r.threshold = threshold;
  Eigen::MatrixXd c = u.array() - t;
  Eigen::MatrixXd b = b_matrix<double>(u, t);
  r.u_eigenvalues = eigenvalues(u);
  r.c_eigenvalues = eigenvalues(c);
  r.b_eigenvalues = eigenvalues(b);
  r.rank_u = rank_of(r.u_eigenvalues, threshold);
  r.rank_c = rank_of(r.c_eigenvalues, threshold);
  r.rank_b = rank_of(r.b_eigenvalues, threshold);
  r.trace_b = b.trace();
  r.trace_b3 = (b * b * b).trace();
  Eigen::VectorXd e = Eigen::VectorXd::Ones(m);
  double norm_u = 0;
  for (double v : r.u_eigenvalues) norm_u = std::max(norm_u, std::abs(v));
  r.e_in_kernel = (u * e).norm() <= threshold * std::max(norm_u, 1e-300);
  r.barycenter_norm = std::sqrt(std::max(0.0, e.dot(u * e)));
  return r;
}

UnitConfig factor_gram(const Eigen::MatrixXd& u, int dim, double tol) {
  if (u.rows() != u.cols()) throw std::invalid_argument("factor_gram: U must be square");
  if (dim < 1 || dim > u.rows()) throw std::invalid_argument("factor_gram: bad dimension");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (u + u.transpose()));
  const auto& vals = es.eigenvalues();
  if (vals.minCoeff() < -tol) throw std::runtime_error("factor_gram: Gram matrix is not PSD");
  const Eigen::Index m = u.rows();
  UnitConfig cfg;
  cfg.dim = dim;
  cfg.points.resize(m, dim);
  for (int k = 0; k < dim; ++k) {
    Eigen::Index idx = vals.size() - 1 - k;
    cfg.points.col(k) = es.eigenvectors().col(idx) * std::sqrt(std::max(0.0, vals(idx)));
  }
  for (Eigen::Index i = 0; i < m; ++i) cfg.labels.push_back("x" + std::to_string(i));
  return cfg;
}

FromOResult from_o_matrix(const Eigen::MatrixXd& o, int n, double tol) {
  FromOResult out;
  out.gram = gram_from_o_matrix<double>(o, n);
  out.rank = rank_of(eigenvalues(out.gram), 1e-8);
  if (out.rank != n)
    throw std::runtime_error("from_o_matrix: Gram matrix has rank " + std::to_string(out.rank) + ", expected " +
                             std::to_string(n));
  out.config = factor_gram(out.gram, n, tol);
  const auto& pts = out.config.points;
  const Eigen::Index m = pts.rows();
  out.distinct = true;
  for (Eigen::Index i = 0; i < m && out.distinct; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j)
      if ((pts.row(i) - pts.row(j)).norm() <= 1e-6) {
        out.distinct = false;
        break;
      }
  out.almost_equiangular = is_almost_equiangular(out.gram, -1.0 / n, tol);
  return out;
}

TwoDesignReport two_design_check(const UnitConfig& cfg, double tol) {
  TwoDesignReport r;
  const int m = cfg.size(), n = cfg.dim;
  if (n < 1) throw std::invalid_argument("two_design_check: empty dimension");
  Eigen::VectorXd sum = cfg.points.colwise().sum().transpose();
  Eigen::MatrixXd mom = cfg.points.transpose() * cfg.points;
  mom.diagonal().array() -= double(m) / n;
  r.barycenter_defect = sum.cwiseAbs().maxCoeff();
  r.moment_defect = mom.cwiseAbs().maxCoeff();
  r.is_2design = r.barycenter_defect <= tol && r.moment_defect <= tol;
  return r;
}

MaximumSetGraphReport maximum_set_graph_checks(const SimpleGraph& g, int n) {
  if (g.order() != 2 * (n + 1))
    throw std::invalid_argument("maximum_set_graph_checks: graph must have " + std::to_string(2 * (n + 1)) +
                                " vertices");
  MaximumSetGraphReport r;
  r.contains_k_n1 = contains_clique(g, n + 1);
  SimpleGraph h = g.complement();
  const int m = h.order();
  r.complement_quadrangular = true;
  for (int a = 0; a < m && r.complement_quadrangular; ++a)
    for (int b = a + 1; b < m; ++b)
      if (popcount(h.neighbors(a) & h.neighbors(b)) == 1) {
        r.complement_quadrangular = false;
        r.quadrangular_witness = std::make_pair(a, b);
        break;
      }
  r.min_complement_degree = m;
  r.max_complement_degree = 0;
  for (int v = 0; v < m; ++v) {
    r.min_complement_degree = std::min(r.min_complement_degree, h.degree(v));
    r.max_complement_degree = std::max(r.max_complement_degree, h.degree(v));
  }
  r.complement_degrees_in_range = r.min_complement_degree >= 1 && r.max_complement_degree <= n + 1;
  return r;
}

}  // namespace eqlab
