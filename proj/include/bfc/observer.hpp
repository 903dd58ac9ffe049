#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "bfc/geometry.hpp"
#include "bfc/graph.hpp"
#include "bfc/trajectory.hpp"

namespace bfc {

/// Estimate dynamics ṗ̂ = v − L_B p̂, with L_B built from the measured (true)
/// bearings and v the known true velocities.
Eigen::VectorXd observer_rhs(const Eigen::VectorXd& p_hat, const Eigen::VectorXd& v,
                             const Eigen::MatrixXd& l_b);

struct ObserverLog {
  int d = 2;
  std::vector<double> times;
  std::vector<Eigen::VectorXd> p_hat;
  std::vector<Eigen::VectorXd> estimate_error;  // p̂ − p
  std::vector<double> zeta_norm;    // ‖p̂ − p − UUᵀ(p̂(0)−p(0))/n‖
  std::vector<double> u_zeta_norm;  // ‖Uᵀζ‖, identically 0 up to roundoff
  Eigen::VectorXd expected_offset;  // UUᵀ(p̂(0)−p(0))/n
  Eigen::VectorXd final_offset;     // p̂(end) − p(end)
};

/// Integrates the observer along a known true motion. The estimate converges
/// to p(t) + UUᵀ(p̂(0)−p(0))/n exponentially when the true formation is BPE;
/// the residual translation offset is the unobservable direction.
ObserverLog run_observer(const DesiredMotion& true_motion, const OrientedGraph& g,
                         const Eigen::VectorXd& p_hat0, double horizon, double dt,
                         double eps_min = kDefaultEpsMin);

/// Reproducible default initial estimate: seeded uniform draw from [−2, 2]^{dn}.
Eigen::VectorXd default_observer_init(int dn, std::uint64_t seed);

}  // namespace bfc
