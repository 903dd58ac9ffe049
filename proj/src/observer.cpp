#include "bfc/observer.hpp"

#include <cmath>

#include "bfc/errors.hpp"
#include "bfc/integrate.hpp"
#include "bfc/linalg.hpp"
#include "bfc/random.hpp"

namespace bfc {

Eigen::VectorXd observer_rhs(const Eigen::VectorXd& p_hat, const Eigen::VectorXd& v,
                             const Eigen::MatrixXd& l_b) {
  return v - l_b * p_hat;
}

ObserverLog run_observer(const DesiredMotion& true_motion, const OrientedGraph& g,
                         const Eigen::VectorXd& p_hat0, double horizon, double dt,
                         double eps_min) {
  const int d = true_motion.d;
  const int n = true_motion.agent_count();
  IncidenceMatrix inc = incidence_matrix(g, d);
  Eigen::MatrixXd u = translation_basis(n, d);

  // Bearings are re-evaluated from the true (analytic) trajectory at every
  // RK4 stage time; the measurement stream is treated as continuous.
  Rhs rhs = [&](double t, const Eigen::VectorXd& p_hat) {
    MotionSample s = eval(true_motion, t);
    Configuration cfg(d, s.p_star);
    return observer_rhs(p_hat, s.v_star, bearing_laplacian(cfg, inc, eps_min));
  };

  Eigen::VectorXd p0 = eval(true_motion, 0.0).p_star;
  Eigen::VectorXd offset = u * (u.transpose() * (p_hat0 - p0)) / static_cast<double>(n);

  Trajectory traj = integrate(rhs, p_hat0, horizon, dt);

  ObserverLog log;
  log.d = d;
  log.times = traj.times;
  log.p_hat = traj.states;
  log.expected_offset = offset;
  log.estimate_error.reserve(traj.times.size());
  log.zeta_norm.reserve(traj.times.size());
  log.u_zeta_norm.reserve(traj.times.size());
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    Eigen::VectorXd p_true = eval(true_motion, traj.times[i]).p_star;
    Eigen::VectorXd err = traj.states[i] - p_true;
    Eigen::VectorXd zeta = err - offset;
    log.estimate_error.push_back(err);
    log.zeta_norm.push_back(zeta.norm());
    log.u_zeta_norm.push_back((u.transpose() * zeta).norm());
  }
  log.final_offset = log.estimate_error.back();
  return log;
}

Eigen::VectorXd default_observer_init(int dn, std::uint64_t seed) {
  return Rng(seed).uniform_vector(dn, -2.0, 2.0);
}

}  // namespace bfc
