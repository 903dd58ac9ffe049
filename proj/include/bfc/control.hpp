#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bfc/geometry.hpp"
#include "bfc/graph.hpp"
#include "bfc/simlog.hpp"
#include "bfc/trajectory.hpp"

namespace bfc {

struct ControlParams {
  double k_p = 1.0;  // positive gain (1/s)
};

/// Per-agent bearing-only control: v_i = −k_p Σ_j π_{g_ij} p*_ij + v*_i.
/// Receives only agent i's neighbourhood data — bearings to its neighbours
/// and the corresponding desired relative positions — which is the
/// distributedness contract. At the desired bearings every projector
/// annihilates its p*_ij and the agent flies v*_i.
Eigen::VectorXd agent_control(const std::vector<Eigen::VectorXd>& bearings,
                              const std::vector<Eigen::VectorXd>& desired_rel,
                              const Eigen::VectorXd& v_star_i,
                              const ControlParams& params);

/// Stacks agent_control over all agents; algebraically equals
/// v*(t) − k_p L_B(p) (p − p*(t)).
Eigen::VectorXd closed_loop_rhs(const Eigen::VectorXd& p, double t,
                                const DesiredMotion& motion, const OrientedGraph& g,
                                const ControlParams& params,
                                double eps_min = kDefaultEpsMin);

/// Error coordinates of the closed loop at one instant.
struct ErrorState {
  Eigen::VectorXd p_tilde;  // p − p*
  Eigen::VectorXd delta;    // p̃ − UUᵀp̃(0)/n
  Eigen::VectorXd p_bar;    // Uᵀp̃/n, invariant along the closed loop
};

ErrorState error_state(const Eigen::VectorXd& p, const Eigen::VectorXd& p_star,
                       const Eigen::VectorXd& p_tilde0, int d);

/// Worst-case centroid drift max_t ‖p̄(t) − p̄(0)‖ of a logged run;
/// zero up to integration error.
double centroid_drift(const SimLog& log);

}  // namespace bfc
