#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace bfc {

using Rhs = std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>;

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
};

/// One classical RK4 step.
Eigen::VectorXd rk4_step(const Rhs& rhs, double t, const Eigen::VectorXd& x, double dt);

/// Fixed-step RK4 over [0, horizon]. Deterministic for fixed inputs; a
/// trailing partial step covers horizons that are not multiples of dt.
/// Errors thrown by rhs are rethrown as SimAborted with the failing time.
Trajectory integrate(const Rhs& rhs, const Eigen::VectorXd& x0, double horizon,
                     double dt);

}  // namespace bfc
