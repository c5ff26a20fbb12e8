#include "eqlab/geometry.hpp"

#include "eqlab/linalg.hpp"
#include "eqlab/patterns.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace eqlab {

namespace {

constexpr double pi = std::numbers::pi;

std::vector<std::string> numbered(const std::string& prefix, int k) {
  std::vector<std::string> out;
  for (int i = 0; i < k; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Eigen::MatrixXd equal_gram(int m, double off) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Constant(m, m, off);
  g.diagonal().setOnes();
  return g;
}

// m unit vectors in R^dim with pairwise inner product ip.
Eigen::MatrixXd equal_vectors(int m, double ip, int dim) {
  auto pts = embed_gram(equal_gram(m, ip), dim, 1e-10);
  if (!pts) throw std::runtime_error("equiangular vectors do not fit in dimension " + std::to_string(dim));
  for (int i = 0; i < m; ++i) pts->row(i).normalize();
  return *pts;
}

void normalize_rows(Eigen::MatrixXd& p) {
  for (Eigen::Index i = 0; i < p.rows(); ++i) p.row(i).normalize();
}

Eigen::MatrixXd random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = nd(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) *= -1;
  return q;
}

// Orthonormal basis (columns) of span(vs)^perp, randomly rotated inside it.
Eigen::MatrixXd complement_basis(const Eigen::MatrixXd& vs, int n, std::mt19937_64& rng) {
  int r = static_cast<int>(vs.cols());
  std::normal_distribution<double> nd;
  Eigen::MatrixXd m(n, n);
  m.leftCols(r) = vs;
  for (int i = 0; i < n; ++i)
    for (int j = r; j < n; ++j) m(i, j) = nd(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  Eigen::MatrixXd q = qr.householderQ();
  return q.rightCols(n - r);
}

}  // namespace

void validate(const UnitConfig& cfg, double norm_tol, double distinct_tol) {
  if (cfg.points.cols() != cfg.dim) throw std::runtime_error("point dimension mismatch");
  for (int i = 0; i < cfg.size(); ++i) {
    double nrm = cfg.points.row(i).norm();
    if (std::abs(nrm - 1.0) > norm_tol)
      throw std::runtime_error("point " + std::to_string(i) + " has norm " + std::to_string(nrm));
  }
  for (int i = 0; i < cfg.size(); ++i)
    for (int j = i + 1; j < cfg.size(); ++j)
      if ((cfg.points.row(i) - cfg.points.row(j)).norm() <= distinct_tol)
        throw std::runtime_error("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

std::string to_string(RealizabilityCase c) {
  switch (c) {
    case RealizabilityCase::dimension: return "dimension";
    case RealizabilityCase::simplex_below_threshold: return "simplex: t < -1/k";
    case RealizabilityCase::simplex_full: return "simplex: k = n requires t = -1/n";
    case RealizabilityCase::rhombus: return "rhombus: k <= n-1 and -1/k < t < 1";
    case RealizabilityCase::rhombus_threshold: return "rhombus: t <= -1/k or t >= 1";
    case RealizabilityCase::spindle_a: return "spindle (a): n = 2, t in {t_1_1, t_1_3}";
    case RealizabilityCase::spindle_b: return "spindle (b): k = l = n-1, t_k_1 <= t <= t_k_2 or t >= t_k_3";
    case RealizabilityCase::spindle_c: return "spindle (c): k = l < n-1, t >= t_k_1";
    case RealizabilityCase::spindle_d: return "spindle (d): k < l, t > -1/l";
    case RealizabilityCase::spindle_bad_t: return "spindle: t <= -1/l or t >= 1";
  }
  return "?";
}

// ---- simplices ----

bool simplex_realizable(int k, int n, const AlgebraicNumber& t) {
  if (k < 1 || n < 1 || k > n) return false;
  if (t >= AlgebraicNumber(1)) return false;
  Rational thr = Rational(-1) / k;
  if (k == n) return compare(t, thr) == 0;
  return compare(t, thr) >= 0;
}

double circumradius(int k, double t) { return std::sqrt((1.0 - t) * k / (k + 1.0)); }

UnitConfig build_simplex(int k, int n, double t) {
  if (!simplex_realizable(k, n, AlgebraicNumber(snap_rational(t))))
    throw std::domain_error("K_" + std::to_string(k + 1) + " is not realizable at this (n, t)");
  auto pts = embed_gram(equal_gram(k + 1, t), n, 1e-10);
  if (!pts) throw std::runtime_error("simplex embedding failed");
  normalize_rows(*pts);
  return {n, *pts, numbered("v", k + 1)};
}

// ---- rhombi ----

double rhombus_tau(int k, double t) {
  double den = (k - 1) * t + 1;
  if (den == 0.0) throw std::domain_error("rhombus tau has a pole at (k-1)t + 1 = 0");
  return 2.0 * k * t * t / den - 1.0;
}

Rational rhombus_tau(int k, const Rational& t) {
  Rational den = Rational(k - 1) * t + 1;
  if (den == 0) throw std::domain_error("rhombus tau has a pole at (k-1)t + 1 = 0");
  return Rational(2 * k) * t * t / den - 1;
}

RealizabilityVerdict rhombus_realizable(int k, int n, const AlgebraicNumber& t) {
  RealizabilityVerdict v;
  if (k < 1 || k > n - 1) {
    v.reason = RealizabilityCase::dimension;
    v.detail = "a k-rhombus needs k <= n-1";
    return v;
  }
  if (compare(t, Rational(-1) / k) <= 0 || compare(t, Rational(1)) >= 0) {
    v.reason = RealizabilityCase::rhombus_threshold;
    return v;
  }
  double td = t.to_double();
  v.realizable = true;
  v.reason = RealizabilityCase::rhombus;
  v.tau1 = rhombus_tau(k, td);
  v.apex_radius = std::sqrt(std::max(0.0, 1.0 - k * td * td / ((k - 1) * td + 1)));
  v.rigid = (k == n - 1);
  return v;
}

UnitConfig build_rhombus(int k, int n, double t, std::optional<double> apex_ip) {
  auto verdict = rhombus_realizable(k, n, AlgebraicNumber(snap_rational(t)));
  if (!verdict.realizable) throw std::domain_error("rhombus not realizable: " + to_string(verdict.reason));
  double tau = verdict.tau1;
  double ip = apex_ip.value_or(tau);
  const double eps = 1e-12;
  if (ip < tau - eps || ip >= 1.0) throw std::domain_error("apex inner product outside [tau, 1)");
  if (verdict.rigid && std::abs(ip - tau) > eps)
    throw std::domain_error("apex inner product is forced to tau when k = n-1");
  bool flat = std::abs(ip - tau) <= eps;
  // Axes: 0 = base centre, 1..k-1 = base simplex, k = f1, k+1 = f2.
  double h2 = ((k - 1) * t + 1) / k;
  double h = std::sqrt(h2);
  double rho = std::sqrt(std::max(0.0, 1.0 - h2));
  double alpha = t / h;
  double r = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
  Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(k + 2, n);
  pts(0, 0) = alpha;
  pts(0, k) = r;
  if (k >= 2) {
    Eigen::MatrixXd sigma = equal_vectors(k, -1.0 / (k - 1), k - 1);
    for (int i = 0; i < k; ++i) {
      pts(1 + i, 0) = h;
      pts.row(1 + i).segment(1, k - 1) = rho * sigma.row(i);
    }
  } else {
    pts(1, 0) = 1.0;
  }
  double cphi = flat ? -1.0 : std::clamp((ip - alpha * alpha) / (r * r), -1.0, 1.0);
  double sphi = std::sqrt(std::max(0.0, 1.0 - cphi * cphi));
  pts(k + 1, 0) = alpha;
  pts(k + 1, k) = r * cphi;
  if (sphi > 0) {
    if (k + 1 >= n) throw std::domain_error("apex inner product needs one more dimension");
    pts(k + 1, k + 1) = r * sphi;
  }
  normalize_rows(pts);
  std::vector<std::string> labels{"e"};
  for (auto& s : numbered("b", k)) labels.push_back(s);
  labels.push_back("p");
  return {n, pts, labels};
}

// ---- spindles ----

double spindle_E(int k, int l, double t) {
  double t1 = rhombus_tau(k, t), t2 = rhombus_tau(l, t);
  const double eps = 1e-12;
  if (std::abs(t1) > 1 + eps || std::abs(t2) > 1 + eps) throw std::domain_error("tau outside [-1, 1]");
  t1 = std::clamp(t1, -1.0, 1.0);
  t2 = std::clamp(t2, -1.0, 1.0);
  return t1 * t2 - std::sqrt(1 - t1 * t1) * std::sqrt(1 - t2 * t2);
}

RealizabilityVerdict spindle_realizable(int k, int l, int n, const AlgebraicNumber& t) {
  if (k > l) std::swap(k, l);
  RealizabilityVerdict v;
  if (k < 1 || l > n - 1) {
    v.reason = RealizabilityCase::dimension;
    v.detail = "both rhombi need size <= n-1";
    return v;
  }
  if (compare(t, Rational(-1) / l) <= 0 || compare(t, Rational(1)) >= 0) {
    v.reason = RealizabilityCase::spindle_bad_t;
    return v;
  }
  double td = t.to_double();
  v.tau1 = rhombus_tau(k, td);
  v.tau2 = rhombus_tau(l, td);
  v.E = spindle_E(k, l, td);
  if (n == 2) {
    v.reason = RealizabilityCase::spindle_a;
    v.roots = {moser_root(1, 1), moser_root(1, 3)};
    v.realizable = (t == v.roots[0] || t == v.roots[1]);
  } else if (k == l && l == n - 1) {
    v.reason = RealizabilityCase::spindle_b;
    v.roots = {moser_root(k, 1), moser_root(k, 2), moser_root(k, 3)};
    v.realizable = (t >= v.roots[0] && t <= v.roots[1]) || t >= v.roots[2];
  } else if (k == l) {
    v.reason = RealizabilityCase::spindle_c;
    v.roots = {moser_root(k, 1)};
    v.realizable = t >= v.roots[0];
  } else {
    v.reason = RealizabilityCase::spindle_d;
    v.realizable = true;
  }
  return v;
}

namespace {

struct Placement {
  double theta1, theta2;
};

std::optional<Placement> place_apexes(double tmax1, bool fixed1, double tmax2, bool fixed2, double theta_t) {
  const double eps = 1e-9;
  auto ok = [&](double a, double b) {
    return a > 0 && b > 0 && std::abs(a - b) <= theta_t + eps &&
           theta_t <= std::min(a + b, 2 * pi - a - b) + eps;
  };
  if (fixed1 && fixed2) {
    if (ok(tmax1, tmax2)) return Placement{tmax1, tmax2};
    return std::nullopt;
  }
  if (!fixed1 && !fixed2) {
    if (tmax1 + tmax2 < theta_t - eps) return std::nullopt;
    double a = std::min(tmax1, std::max(theta_t - tmax2, theta_t / 2));
    double b = theta_t - a;
    if (ok(a, b)) return Placement{a, b};
    return std::nullopt;
  }
  // One apex fixed: the other ranges over an interval.
  bool swap = fixed1;
  double fixed_theta = swap ? tmax1 : tmax2;
  double free_max = swap ? tmax2 : tmax1;
  double lo = std::abs(theta_t - fixed_theta);
  double hi = std::min({fixed_theta + theta_t, 2 * pi - theta_t - fixed_theta, free_max});
  if (lo > hi + eps) return std::nullopt;
  double a = (hi > lo) ? 0.5 * (lo + hi) : hi;
  if (a <= 0) return std::nullopt;
  if (swap) return Placement{fixed_theta, a};
  return Placement{a, fixed_theta};
}

}  // namespace

UnitConfig build_spindle(int k, int l, int n, double t) {
  if (k > l) std::swap(k, l);
  if (k < 1 || l > n - 1) throw std::domain_error("spindle infeasible: " + to_string(RealizabilityCase::dimension));
  if (t <= -1.0 / l || t >= 1.0)
    throw std::domain_error("spindle infeasible: " + to_string(RealizabilityCase::spindle_bad_t));
  double tau1 = rhombus_tau(k, t), tau2 = rhombus_tau(l, t);
  double tmax1 = std::acos(std::clamp(tau1, -1.0, 1.0));
  double tmax2 = std::acos(std::clamp(tau2, -1.0, 1.0));
  bool fixed1 = (k == n - 1), fixed2 = (l == n - 1);
  double theta_t = std::acos(t);
  auto pl = place_apexes(tmax1, fixed1, tmax2, fixed2, theta_t);
  auto case_name = [&]() {
    if (n == 2) return to_string(RealizabilityCase::spindle_a);
    if (k == l && l == n - 1) return to_string(RealizabilityCase::spindle_b);
    if (k == l) return to_string(RealizabilityCase::spindle_c);
    return to_string(RealizabilityCase::spindle_d);
  };
  if (!pl) throw std::domain_error("spindle infeasible: " + case_name());
  if (n == 2 && std::abs(t - moser_root(1, 1).to_double()) > 1e-9 && std::abs(t - moser_root(1, 3).to_double()) > 1e-9)
    throw std::domain_error("spindle infeasible: " + case_name());

  const SimpleGraph graph = spindle_graph(k, l);
  for (unsigned attempt = 0; attempt < 16; ++attempt) {
    std::mt19937_64 rng(0x5eedULL + 7919ULL * attempt);
    double c1 = std::cos(pl->theta1), s1 = std::sin(pl->theta1);
    double c2 = std::cos(pl->theta2), s2 = std::sin(pl->theta2);
    // An apex at a pole leaves the azimuth free.
    double cphi = s1 * s2 < 1e-12 ? 1.0 : std::clamp((t - c1 * c2) / (s1 * s2), -1.0, 1.0);
    if (n < 3 && 1.0 - std::abs(cphi) <= 1e-9) cphi = cphi > 0 ? 1.0 : -1.0;
    double sphi = std::sqrt(std::max(0.0, 1.0 - cphi * cphi));
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n), p1 = e, p2 = e;
    e(0) = 1;
    p1(0) = c1;
    p1(1) = s1;
    p2(0) = c2;
    p2(1) = s2 * cphi;
    if (sphi > 1e-15) {
      if (n < 3) throw std::domain_error("spindle infeasible: " + case_name());
      p2(2) = s2 * sphi;
    }
    auto base = [&](const Eigen::VectorXd& p, double c, int size, bool flip) {
      Eigen::MatrixXd out(size, n);
      double lam = (1 + c > 1e-14) ? t / (1 + c) : 0.0;
      double r2 = (1 + c > 1e-14) ? 1 - 2 * t * t / (1 + c) : 1.0;
      double r = std::sqrt(std::max(0.0, r2));
      Eigen::VectorXd centre = lam * (e + p);
      if (r2 < 1e-12) {
        for (int i = 0; i < size; ++i) out.row(i) = centre.transpose();
        return out;
      }
      double gamma = (t - lam * lam * (2 + 2 * c)) / (r * r);
      // p = -e leaves only e to avoid.
      bool polar = std::abs(c) > 1 - 1e-12;
      Eigen::MatrixXd span(n, polar ? 1 : 2);
      span.col(0) = e;
      if (!polar) span.col(1) = p;
      Eigen::MatrixXd q = complement_basis(span, n, rng);
      // With a one-dimensional complement both bases can land on the same axis.
      if (flip) q = -q;
      Eigen::MatrixXd sigma = size == 1 ? Eigen::MatrixXd::Identity(1, 1)
                                        : equal_vectors(size, std::clamp(gamma, -1.0, 1.0), static_cast<int>(q.cols()));
      if (size == 1 && q.cols() == 0) throw std::domain_error("spindle infeasible: " + case_name());
      for (int i = 0; i < size; ++i)
        out.row(i) = (centre + r * q.leftCols(sigma.cols()) * sigma.row(i).transpose()).transpose();
      return out;
    };
    UnitConfig cfg;
    cfg.dim = n;
    cfg.points.resize(k + l + 3, n);
    cfg.points.row(0) = e.transpose();
    cfg.points.middleRows(1, k) = base(p1, c1, k, false);
    cfg.points.row(k + 1) = p1.transpose();
    cfg.points.middleRows(k + 2, l) = base(p2, c2, l, attempt % 2 == 1);
    cfg.points.row(k + l + 2) = p2.transpose();
    normalize_rows(cfg.points);
    cfg.labels = graph.labels();
    try {
      validate(cfg);
    } catch (const std::runtime_error&) {
      continue;
    }
    if (max_edge_defect(cfg, graph, t) <= 1e-10) return cfg;
  }
  throw std::runtime_error("spindle placement failed numerically");
}

// ---- other constructions ----

UnitConfig build_double_simplex(int n) {
  if (n < 2) throw std::domain_error("double simplex needs n >= 2");
  double t = -1.0 / n;
  UnitConfig s = build_simplex(n, n, t);
  std::mt19937_64 rng(20240917);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Eigen::MatrixXd rot = random_orthogonal(n, rng);
    Eigen::MatrixXd second = s.points * rot.transpose();
    Eigen::MatrixXd cross = s.points * second.transpose();
    bool good = true;
    for (Eigen::Index i = 0; i < cross.rows() && good; ++i)
      for (Eigen::Index j = 0; j < cross.cols() && good; ++j)
        if (std::abs(cross(i, j) - t) < 1e-6 || cross(i, j) > 1 - 1e-9) good = false;
    if (!good) continue;
    UnitConfig out;
    out.dim = n;
    out.points.resize(2 * (n + 1), n);
    out.points << s.points, second;
    out.labels = numbered("a", n + 1);
    for (auto& l : numbered("b", n + 1)) out.labels.push_back(l);
    return out;
  }
  throw std::runtime_error("no generic rotation found");
}

UnitConfig larman_rogers() {
  UnitConfig cfg;
  cfg.dim = 5;
  cfg.points.resize(16, 5);
  int row = 0;
  for (int mask = 0; mask < 32; ++mask) {
    if (__builtin_popcount(mask) % 2 == 0) continue;
    for (int c = 0; c < 5; ++c) cfg.points(row, c) = ((mask >> c) & 1) ? 1.0 : -1.0;
    std::ostringstream lab;
    for (int c = 0; c < 5; ++c) lab << (((mask >> c) & 1) ? '+' : '-');
    cfg.labels.push_back(lab.str());
    ++row;
  }
  cfg.points /= std::sqrt(5.0);
  return cfg;
}

Eigen::MatrixXd gram(const UnitConfig& cfg) { return cfg.points * cfg.points.transpose(); }

SimpleGraph distance_graph(const Eigen::MatrixXd& g, double t, double tol) {
  int m = static_cast<int>(g.rows());
  SimpleGraph out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (std::abs(g(i, j) - t) <= tol) out.add_edge(i, j);
  return out;
}

std::optional<std::array<int, 3>> offending_triple(const Eigen::MatrixXd& g, double t, double tol) {
  return find_empty_triple(distance_graph(g, t, tol));
}

double max_edge_defect(const UnitConfig& cfg, const SimpleGraph& g, double t) {
  double worst = 0;
  for (auto [i, j] : g.edges()) worst = std::max(worst, std::abs(cfg.points.row(i).dot(cfg.points.row(j)) - t));
  return worst;
}

// ---- heuristic realization ----

std::optional<UnitConfig> heuristic_realize(const SimpleGraph& g, int n, double t, HeuristicOptions opts) {
  const int m = g.order();
  const auto edges = g.edges();
  std::vector<std::pair<int, int>> others;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!g.has_edge(i, j)) others.emplace_back(i, j);
  const double close = 1.0 - 0.5 * opts.distinct_tol * opts.distinct_tol;
  const int nv = m * n;

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> nd;
  for (int restart = 0; restart < opts.restarts; ++restart) {
    Eigen::MatrixXd x(m, n);
    for (int i = 0; i < m; ++i)
      for (int c = 0; c < n; ++c) x(i, c) = nd(rng);
    normalize_rows(x);

    auto residuals = [&](const Eigen::MatrixXd& y, Eigen::VectorXd& r, Eigen::MatrixXd* jac) {
      int nr = static_cast<int>(edges.size() + others.size());
      r.setZero(nr);
      if (jac) jac->setZero(nr, nv);
      int row = 0;
      auto add = [&](int i, int j, double val, double w) {
        r(row) = w * val;
        if (jac) {
          // d(x_i.x_j)/dx_i projected onto the tangent space at x_i.
          Eigen::RowVectorXd gi = y.row(j) - y.row(i).dot(y.row(j)) * y.row(i);
          Eigen::RowVectorXd gj = y.row(i) - y.row(i).dot(y.row(j)) * y.row(j);
          jac->block(row, i * n, 1, n) = w * gi;
          jac->block(row, j * n, 1, n) = w * gj;
        }
        ++row;
      };
      for (auto [i, j] : edges) add(i, j, y.row(i).dot(y.row(j)) - t, 1.0);
      for (auto [i, j] : others) {
        double d = y.row(i).dot(y.row(j)) - close;
        if (d > 0) {
          add(i, j, d, 1.0);
        } else {
          ++row;
        }
      }
    };

    Eigen::VectorXd r;
    Eigen::MatrixXd jac;
    double mu = 1e-3;
    residuals(x, r, &jac);
    double cost = r.squaredNorm();
    for (int it = 0; it < opts.iters && cost > 1e-26; ++it) {
      Eigen::MatrixXd a = jac.transpose() * jac;
      Eigen::VectorXd grad = jac.transpose() * r;
      a.diagonal().array() += mu;
      Eigen::VectorXd step = a.ldlt().solve(-grad);
      Eigen::MatrixXd trial = x;
      for (int i = 0; i < m; ++i) trial.row(i) += step.segment(i * n, n).transpose();
      normalize_rows(trial);
      Eigen::VectorXd rt;
      residuals(trial, rt, nullptr);
      double ct = rt.squaredNorm();
      if (ct < cost) {
        x = trial;
        cost = ct;
        residuals(x, r, &jac);
        mu = std::max(mu * 0.3, 1e-15);
      } else {
        mu *= 4;
        if (mu > 1e8) break;
      }
    }
    UnitConfig cfg{n, x, g.labels()};
    if (cfg.labels.empty())
      for (int i = 0; i < m; ++i) cfg.labels.push_back(std::to_string(i));
    if (max_edge_defect(cfg, g, t) > opts.edge_tol) continue;
    try {
      validate(cfg, 1e-12, opts.distinct_tol);
    } catch (const std::runtime_error&) {
      continue;
    }
    return cfg;
  }
  return std::nullopt;
}

// ---- extended rhombus ----

double extended_rhombus_apex_gap(int n) {
  if (n < 2) throw std::domain_error("extended rhombus needs n >= 2");
  int k = n - 1;
  double t = -1.0 / n;
  UnitConfig r1 = build_rhombus(k, n, t);
  const auto& pts = r1.points;  // e, b0..b{k-1}, p
  Eigen::VectorXd e = pts.row(0).transpose();
  double worst = 0;
  // Second rhombus has apexes {sigma, f} over the base Sigma \ {sigma}.
  for (int sigma : {1, k + 1}) {
    std::vector<int> base;
    for (int v = 1; v <= k + 1; ++v)
      if (v != sigma) base.push_back(v);
    Eigen::MatrixXd bm(n, static_cast<int>(base.size()));
    for (std::size_t i = 0; i < base.size(); ++i) bm.col(static_cast<int>(i)) = pts.row(base[i]).transpose();
    // The solutions of x.b = t, |x| = 1 are mirror images across span(base).
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(bm);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::VectorXd u = q.col(n - 1);
    Eigen::VectorXd s = pts.row(sigma).transpose();
    Eigen::VectorXd f = s - 2 * s.dot(u) * u;
    worst = std::max(worst, (f - e).norm());
  }
  return worst;
}

}  // namespace eqlab
