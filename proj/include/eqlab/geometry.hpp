#pragma once

#include "eqlab/graph.hpp"
#include "eqlab/polynomial.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace eqlab {

struct UnitConfig {
  int dim = 0;
  Eigen::MatrixXd points;  // one point per row
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(points.rows()); }
};

// Throws std::runtime_error if some norm is off by more than tol or two points coincide.
void validate(const UnitConfig& cfg, double norm_tol = 1e-12, double distinct_tol = 1e-9);

enum class RealizabilityCase {
  dimension,
  simplex_below_threshold,
  simplex_full,
  rhombus,
  rhombus_threshold,
  spindle_a,
  spindle_b,
  spindle_c,
  spindle_d,
  spindle_bad_t,
};
std::string to_string(RealizabilityCase c);

struct RealizabilityVerdict {
  bool realizable = false;
  RealizabilityCase reason = RealizabilityCase::dimension;
  std::string detail;
  double tau1 = 0, tau2 = 0, E = 0;
  std::vector<AlgebraicNumber> roots;
  double apex_radius = 0;
  // e.p is forced to tau (rhombus with k = n-1).
  bool rigid = false;
};

bool simplex_realizable(int k, int n, const AlgebraicNumber& t);
double circumradius(int k, double t);
UnitConfig build_simplex(int k, int n, double t);

// Throws std::domain_error at the pole (k-1)t + 1 = 0.
double rhombus_tau(int k, double t);
Rational rhombus_tau(int k, const Rational& t);
RealizabilityVerdict rhombus_realizable(int k, int n, const AlgebraicNumber& t);
// Labels: e, b0..b{k-1}, p.  apex_ip is the desired e.p (default tau).
UnitConfig build_rhombus(int k, int n, double t, std::optional<double> apex_ip = std::nullopt);

double spindle_E(int k, int l, double t);
RealizabilityVerdict spindle_realizable(int k, int l, int n, const AlgebraicNumber& t);
// Labels: e, a0..a{k-1}, p1, b0..b{l-1}, p2 (k <= l after normalization).
UnitConfig build_spindle(int k, int l, int n, double t);

UnitConfig build_double_simplex(int n);
UnitConfig larman_rogers();

Eigen::MatrixXd gram(const UnitConfig& cfg);
SimpleGraph distance_graph(const Eigen::MatrixXd& gram, double t, double tol = 1e-9);
std::optional<std::array<int, 3>> offending_triple(const Eigen::MatrixXd& gram, double t, double tol = 1e-9);
inline bool is_almost_equiangular(const Eigen::MatrixXd& gram, double t, double tol = 1e-9) {
  return !offending_triple(gram, t, tol).has_value();
}
// Largest |x_i.x_j - t| over edges of g.
double max_edge_defect(const UnitConfig& cfg, const SimpleGraph& g, double t);

struct HeuristicOptions {
  unsigned seed = 1;
  int iters = 4000;
  int restarts = 20;
  double edge_tol = 1e-8;
  double distinct_tol = 1e-4;
};
// Never proves nonrealizability; nullopt means inconclusive.
std::optional<UnitConfig> heuristic_realize(const SimpleGraph& g, int n, double t, HeuristicOptions opts = {});

// Two (n-1)-rhombi sharing a K_n at t = -1/n: distance between the free apex
// of the second rhombus and the apex e of the first.
double extended_rhombus_apex_gap(int n);

}  // namespace eqlab
