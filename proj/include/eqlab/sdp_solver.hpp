#pragma once

#include "eqlab/sdpa.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace eqlab {

enum class SdpStatus { optimal, max_iter, infeasible_suspect, numerical_failure };
std::string to_string(SdpStatus s);

struct SdpResult {
  SdpStatus status = SdpStatus::numerical_failure;
  // primal: value of the problem at the returned x, in the problem's own sense.
  // dual: the bound certified by the dual iterate (>= primal for maximization).
  double primal = 0.0;
  double dual = 0.0;
  double gap = 0.0;  // |dual - primal| / max(1, |primal|, |dual|)
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  int iterations = 0;
  std::vector<double> x;
  std::vector<std::string> trace;
};

struct SdpOptions {
  double tol = 1e-8;
  int max_iter = 100;
};

// Infeasible primal-dual path following with HKM directions and Mehrotra correction.
SdpResult solve_sdp(const SdpProblem& p, double tol = 1e-8, int max_iter = 100);

// Blocks of sum_i F_i x_i - F_0 as dense matrices.
std::vector<Eigen::MatrixXd> slack_blocks(const SdpProblem& p, const std::vector<double>& x);
// Smallest eigenvalue over all slack blocks.
double min_slack_eigenvalue(const SdpProblem& p, const std::vector<double>& x);
double objective_value(const SdpProblem& p, const std::vector<double>& x);

}  // namespace eqlab
