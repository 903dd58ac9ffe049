#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bfc {

/// Time series produced by a closed-loop run: states plus the derived error
/// norms. A run that trips the collision guard keeps its partial log and is
/// flagged aborted at the violating step.
struct SimLog {
  int d = 2;
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;        // p(t), dn each
  std::vector<double> p_tilde_norm;           // ‖p − p*‖
  std::vector<double> delta_norm;             // ‖p̃ − UUᵀp̃(0)/n‖
  std::vector<double> centroid_drift;         // ‖p̄(t) − p̄(0)‖
  std::vector<double> min_edge_dist;
  std::vector<Eigen::VectorXd> bearings;      // stacked g_k(t), dm each
  bool aborted = false;
  double abort_time = 0.0;
  std::string abort_reason;
};

}  // namespace bfc
