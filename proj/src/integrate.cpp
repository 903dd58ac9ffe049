#include "bfc/integrate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bfc/errors.hpp"

namespace bfc {

Eigen::VectorXd rk4_step(const Rhs& rhs, double t, const Eigen::VectorXd& x, double dt) {
  Eigen::VectorXd k1 = rhs(t, x);
  Eigen::VectorXd k2 = rhs(t + dt / 2, x + (dt / 2) * k1);
  Eigen::VectorXd k3 = rhs(t + dt / 2, x + (dt / 2) * k2);
  Eigen::VectorXd k4 = rhs(t + dt, x + dt * k3);
  return x + (dt / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
}

Trajectory integrate(const Rhs& rhs, const Eigen::VectorXd& x0, double horizon,
                     double dt) {
  if (dt <= 0) throw std::invalid_argument("integrate: dt must be positive");
  if (horizon < 0) throw std::invalid_argument("integrate: horizon must be >= 0");

  const long long steps = static_cast<long long>(std::floor(horizon / dt + 1e-9));
  const double remainder = horizon - static_cast<double>(steps) * dt;

  Trajectory traj;
  traj.times.reserve(steps + 2);
  traj.states.reserve(steps + 2);
  traj.times.push_back(0.0);
  traj.states.push_back(x0);

  Eigen::VectorXd x = x0;
  double t = 0.0;
  try {
    for (long long i = 0; i < steps; ++i) {
      x = rk4_step(rhs, t, x, dt);
      t = static_cast<double>(i + 1) * dt;
      traj.times.push_back(t);
      traj.states.push_back(x);
    }
    if (remainder > 1e-9 * std::max(1.0, horizon)) {
      x = rk4_step(rhs, t, x, remainder);
      traj.times.push_back(horizon);
      traj.states.push_back(x);
    }
  } catch (const SimAborted&) {
    throw;
  } catch (const std::exception& e) {
    throw SimAborted(std::string(e.what()) + " (integration step starting at t=" +
                         std::to_string(t) + ")",
                     t);
  }
  return traj;
}

}  // namespace bfc
