#include "eqlab/sdp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace eqlab {

std::string to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::optimal: return "optimal";
    case SdpStatus::max_iter: return "max_iter";
    case SdpStatus::infeasible_suspect: return "infeasible-suspect";
    case SdpStatus::numerical_failure: return "numerical-failure";
  }
  return "unknown";
}

std::vector<Eigen::MatrixXd> slack_blocks(const SdpProblem& p, const std::vector<double>& x) {
  std::vector<Eigen::MatrixXd> blocks;
  for (size_t b = 0; b < p.block_sizes.size(); ++b) {
    int d = p.block_dim(static_cast<int>(b));
    blocks.push_back(Eigen::MatrixXd::Zero(d, d));
  }
  for (const auto& e : p.entries) {
    double w = e.matrix == 0 ? -1.0 : x[static_cast<size_t>(e.matrix - 1)];
    blocks[e.block](e.row, e.col) += w * e.value;
    if (e.row != e.col) blocks[e.block](e.col, e.row) += w * e.value;
  }
  return blocks;
}

double min_slack_eigenvalue(const SdpProblem& p, const std::vector<double>& x) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& b : slack_blocks(p, x)) {
    if (b.size() == 0) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b, Eigen::EigenvaluesOnly);
    m = std::min(m, es.eigenvalues().minCoeff());
  }
  return m;
}

double objective_value(const SdpProblem& p, const std::vector<double>& x) {
  double v = 0;
  for (int i = 0; i < p.num_variables(); ++i) v += p.objective[i] * x[i];
  return v;
}

namespace {

using Blocks = std::vector<Eigen::MatrixXd>;

struct OrderedEntry {
  int block, r, c;
  double v;
};

// Internal form: max b.y  s.t.  S = C - sum_i y_i A_i  PSD, with A_i = -F_i, C = -F_0.
struct Internal {
  std::vector<int> dims;
  int m = 0;
  Eigen::VectorXd b;
  std::vector<std::vector<OrderedEntry>> a;  // both orientations of off-diagonal entries
  std::vector<std::vector<OrderedEntry>> a_upper;
  Blocks c;
};

Internal to_internal(const SdpProblem& p) {
  Internal in;
  for (size_t k = 0; k < p.block_sizes.size(); ++k) in.dims.push_back(p.block_dim(static_cast<int>(k)));
  in.m = p.num_variables();
  in.b.resize(in.m);
  double sgn = p.sense == Sense::maximize ? 1.0 : -1.0;
  for (int i = 0; i < in.m; ++i) in.b(i) = sgn * p.objective[i];
  in.a.resize(in.m);
  in.a_upper.resize(in.m);
  for (int d : in.dims) in.c.push_back(Eigen::MatrixXd::Zero(d, d));
  for (const auto& e : p.entries) {
    if (e.matrix == 0) {
      in.c[e.block](e.row, e.col) -= e.value;
      if (e.row != e.col) in.c[e.block](e.col, e.row) -= e.value;
      continue;
    }
    auto& lst = in.a[e.matrix - 1];
    lst.push_back({e.block, e.row, e.col, -e.value});
    if (e.row != e.col) lst.push_back({e.block, e.col, e.row, -e.value});
    in.a_upper[e.matrix - 1].push_back({e.block, e.row, e.col, -e.value});
  }
  for (auto& lst : in.a)
    std::sort(lst.begin(), lst.end(), [](const OrderedEntry& x, const OrderedEntry& y) { return x.block < y.block; });
  return in;
}

double inner(const Blocks& x, const Blocks& y) {
  double s = 0;
  for (size_t k = 0; k < x.size(); ++k) s += (x[k].array() * y[k].array()).sum();
  return s;
}

double fro(const Blocks& x) { return std::sqrt(inner(x, x)); }

// <A_i, K> for every i.
Eigen::VectorXd apply_a(const Internal& in, const Blocks& k) {
  Eigen::VectorXd r = Eigen::VectorXd::Zero(in.m);
  for (int i = 0; i < in.m; ++i)
    for (const auto& e : in.a[i]) r(i) += e.v * k[e.block](e.r, e.c);
  return r;
}

// C - sum y_i A_i
Blocks dual_slack(const Internal& in, const Eigen::VectorXd& y) {
  Blocks s = in.c;
  for (int i = 0; i < in.m; ++i)
    for (const auto& e : in.a[i]) s[e.block](e.r, e.c) -= y(i) * e.v;
  return s;
}

Blocks sum_a(const Internal& in, const Eigen::VectorXd& y) {
  Blocks s;
  for (int d : in.dims) s.push_back(Eigen::MatrixXd::Zero(d, d));
  for (int i = 0; i < in.m; ++i)
    for (const auto& e : in.a[i]) s[e.block](e.r, e.c) += y(i) * e.v;
  return s;
}

bool inverse_spd(const Eigen::MatrixXd& m, Eigen::MatrixXd& inv) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) return false;
  inv = llt.solve(Eigen::MatrixXd::Identity(m.rows(), m.cols()));
  inv = 0.5 * (inv + inv.transpose()).eval();
  return true;
}

// Largest alpha in (0, inf] with x + alpha dx PSD.
double max_step(const Blocks& x, const Blocks& dx) {
  double alpha = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < x.size(); ++k) {
    if (x[k].size() == 0) continue;
    Eigen::LLT<Eigen::MatrixXd> llt(x[k]);
    if (llt.info() != Eigen::Success) return 0.0;
    Eigen::MatrixXd l = llt.matrixL();
    Eigen::MatrixXd w = l.triangularView<Eigen::Lower>().solve(dx[k]);
    w = l.triangularView<Eigen::Lower>().solve(w.transpose()).transpose();
    w = 0.5 * (w + w.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w, Eigen::EigenvaluesOnly);
    double lmin = es.eigenvalues().minCoeff();
    if (lmin < 0) alpha = std::min(alpha, -1.0 / lmin);
  }
  return alpha;
}

// Cholesky of the Jacobi-scaled Schur complement, regularized if needed, with a
// spectral fallback near singular optima. Solves are refined against the unregularized M.
class SchurSolver {
 public:
  bool compute(const Eigen::MatrixXd& m) {
    m_ = m;
    d_ = m.diagonal().cwiseAbs().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
    Eigen::MatrixXd scaled = d_.asDiagonal() * m * d_.asDiagonal();
    for (double rel : {0.0, 1e-14, 1e-12, 1e-10}) {
      Eigen::MatrixXd r = scaled;
      r.diagonal().array() += rel;
      llt_.compute(r);
      if (llt_.info() == Eigen::Success) {
        use_llt_ = true;
        return true;
      }
    }
    use_llt_ = false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(scaled);
    if (es.info() != Eigen::Success) return false;
    double cut = 1e-14 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    Eigen::VectorXd inv = es.eigenvalues().unaryExpr([cut](double v) { return v > cut ? 1.0 / v : 0.0; });
    pinv_ = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
    return pinv_.allFinite();
  }

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const {
    Eigen::VectorXd x = raw(rhs);
    double res = (rhs - m_ * x).norm();
    for (int it = 0; it < 10 && res > 0; ++it) {
      Eigen::VectorXd next = x + raw(rhs - m_ * x);
      double nres = (rhs - m_ * next).norm();
      if (!(nres < res)) break;
      x = next;
      res = nres;
    }
    return x;
  }

 private:
  Eigen::VectorXd raw(const Eigen::VectorXd& r) const {
    Eigen::VectorXd rs = d_.cwiseProduct(r);
    Eigen::VectorXd z = use_llt_ ? Eigen::VectorXd(llt_.solve(rs)) : Eigen::VectorXd(pinv_ * rs);
    return d_.cwiseProduct(z);
  }

  Eigen::MatrixXd m_, pinv_;
  Eigen::VectorXd d_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  bool use_llt_ = true;
};

Blocks symmetrize(Blocks b) {
  for (auto& m : b) m = 0.5 * (m + m.transpose()).eval();
  return b;
}

}  // namespace

SdpResult solve_sdp(const SdpProblem& p, double tol, int max_iter) {
  SdpResult res;
  Internal in = to_internal(p);
  const int m = in.m;
  int ntot = 0;
  for (int d : in.dims) ntot += d;
  if (m == 0) {
    res.status = SdpStatus::optimal;
    return res;
  }

  double max_a = 0, norm_c = fro(in.c);
  std::vector<double> a_norm(static_cast<size_t>(m), 0.0);
  for (int i = 0; i < m; ++i) {
    double s = 0;
    for (const auto& e : in.a[i]) s += e.v * e.v;
    a_norm[i] = std::sqrt(s);
    max_a = std::max(max_a, a_norm[i]);
  }
  double xi = std::max(10.0, std::sqrt(double(ntot)));
  for (int i = 0; i < m; ++i) xi = std::max(xi, ntot * (1 + std::abs(in.b(i))) / (1 + a_norm[i]));
  double eta = std::max({10.0, std::sqrt(double(ntot)), max_a, norm_c});

  Blocks X, S;
  for (int d : in.dims) {
    X.push_back(xi * Eigen::MatrixXd::Identity(d, d));
    S.push_back(eta * Eigen::MatrixXd::Identity(d, d));
  }
  Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
  const double norm_b = in.b.norm();

  // Group each A_i's ordered entries by block for the Schur complement.
  std::vector<std::vector<std::pair<int, int>>> ranges(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto& lst = in.a[i];
    size_t s = 0;
    while (s < lst.size()) {
      size_t e = s;
      while (e < lst.size() && lst[e].block == lst[s].block) ++e;
      ranges[i].push_back({static_cast<int>(s), static_cast<int>(e)});
      s = e;
    }
  }

  for (int iter = 0; iter <= max_iter; ++iter) {
    Blocks Rd;
    {
      Blocks cs = dual_slack(in, y);
      for (size_t k = 0; k < cs.size(); ++k) Rd.push_back(cs[k] - S[k]);
    }
    Eigen::VectorXd Rp = in.b - apply_a(in, X);
    double pobj = inner(in.c, X), dobj = in.b.dot(y);
    double pinf = Rp.norm() / (1 + norm_b);
    double dinf = fro(Rd) / (1 + norm_c);
    double gap = std::abs(pobj - dobj) / std::max({1.0, std::abs(pobj), std::abs(dobj)});
    double mu = inner(X, S) / ntot;
    {
      std::ostringstream os;
      os << "iter " << iter << " pobj " << pobj << " dobj " << dobj << " gap " << gap << " pinf " << pinf
         << " dinf " << dinf << " mu " << mu;
      res.trace.push_back(os.str());
    }
    res.iterations = iter;
    res.primal_infeasibility = dinf;
    res.dual_infeasibility = pinf;
    double sgn = p.sense == Sense::maximize ? 1.0 : -1.0;
    res.primal = sgn * dobj;
    res.dual = sgn * pobj;
    res.gap = gap;
    res.x.assign(y.data(), y.data() + m);
    if (gap <= tol && pinf <= tol && dinf <= tol) {
      res.status = SdpStatus::optimal;
      return res;
    }
    if (y.norm() > 1e12 || inner(X, X) > 1e24) {
      res.status = SdpStatus::infeasible_suspect;
      return res;
    }
    if (iter == max_iter) break;

    Blocks Sinv(S.size());
    for (size_t k = 0; k < S.size(); ++k)
      if (S[k].size() && !inverse_spd(S[k], Sinv[k])) {
        res.status = SdpStatus::numerical_failure;
        res.trace.push_back("S lost definiteness");
        return res;
      }

    // Schur complement M_ij = <A_i, X A_j S^{-1}>.
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        double acc = 0;
        for (auto [si, ei] : ranges[i]) {
          int blk = in.a[i][si].block;
          for (auto [sj, ej] : ranges[j]) {
            if (in.a[j][sj].block != blk) continue;
            const auto& Xb = X[blk];
            const auto& Sb = Sinv[blk];
            for (int a = si; a < ei; ++a) {
              const auto& ea = in.a[i][a];
              for (int c = sj; c < ej; ++c) {
                const auto& ec = in.a[j][c];
                acc += ea.v * ec.v * Xb(ea.r, ec.r) * Sb(ec.c, ea.c);
              }
            }
          }
        }
        M(i, j) = M(j, i) = acc;
      }
    SchurSolver solver;
    if (!solver.compute(M)) {
      res.status = SdpStatus::numerical_failure;
      res.trace.push_back("Schur complement factorization failed");
      return res;
    }

    auto direction = [&](const Blocks& Z, Blocks& dX, Eigen::VectorXd& dy, Blocks& dS) {
      Blocks K(X.size());
      for (size_t k = 0; k < X.size(); ++k) K[k] = (Z[k] - X[k] * Rd[k]) * Sinv[k];
      dy = solver.solve(Rp - apply_a(in, symmetrize(K)));
      Blocks ady = sum_a(in, dy);
      dS.resize(X.size());
      dX.resize(X.size());
      for (size_t k = 0; k < X.size(); ++k) {
        dS[k] = Rd[k] - ady[k];
        dX[k] = (Z[k] - X[k] * dS[k]) * Sinv[k];
      }
      dX = symmetrize(dX);
    };

    // Predictor.
    Blocks Z(X.size());
    for (size_t k = 0; k < X.size(); ++k) Z[k] = -X[k] * S[k];
    Blocks dXa, dSa;
    Eigen::VectorXd dya;
    direction(Z, dXa, dya, dSa);
    double ap = std::min(1.0, max_step(X, dXa)), ad = std::min(1.0, max_step(S, dSa));
    double mu_aff = 0;
    for (size_t k = 0; k < X.size(); ++k)
      mu_aff += ((X[k] + ap * dXa[k]).array() * (S[k] + ad * dSa[k]).array()).sum();
    mu_aff /= ntot;
    double sigma = std::clamp(std::pow(mu_aff / mu, 3), 0.0, 1.0);

    // Corrector.
    for (size_t k = 0; k < X.size(); ++k)
      Z[k] = sigma * mu * Eigen::MatrixXd::Identity(in.dims[k], in.dims[k]) - X[k] * S[k] - dXa[k] * dSa[k];
    Blocks dX, dS;
    Eigen::VectorXd dy;
    direction(Z, dX, dy, dS);
    const double gamma = 0.95;
    ap = std::min(1.0, gamma * max_step(X, dX));
    ad = std::min(1.0, gamma * max_step(S, dS));
    for (size_t k = 0; k < X.size(); ++k) {
      X[k] += ap * dX[k];
      S[k] += ad * dS[k];
    }
    y += ad * dy;
    X = symmetrize(X);
    S = symmetrize(S);
  }
  res.status = SdpStatus::max_iter;
  return res;
}

}  // namespace eqlab
