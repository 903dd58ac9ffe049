#include "bfc/control.hpp"

#include <algorithm>
#include <stdexcept>

#include "bfc/linalg.hpp"

namespace bfc {

Eigen::VectorXd agent_control(const std::vector<Eigen::VectorXd>& bearings,
                              const std::vector<Eigen::VectorXd>& desired_rel,
                              const Eigen::VectorXd& v_star_i,
                              const ControlParams& params) {
  if (bearings.size() != desired_rel.size())
    throw std::invalid_argument("agent_control: bearing/desired list size mismatch");
  Eigen::VectorXd v = v_star_i;
  for (std::size_t j = 0; j < bearings.size(); ++j) {
    const Eigen::VectorXd& g = bearings[j];
    // π_g x = x − g (gᵀx), applied without forming the projector
    const Eigen::VectorXd& ps = desired_rel[j];
    v -= params.k_p * (ps - g * g.dot(ps));
  }
  return v;
}

Eigen::VectorXd closed_loop_rhs(const Eigen::VectorXd& p, double t,
                                const DesiredMotion& motion, const OrientedGraph& g,
                                const ControlParams& params, double eps_min) {
  const int d = motion.d;
  const int n = g.vertex_count();
  MotionSample s = eval(motion, t);
  Eigen::VectorXd v(n * d);
  std::vector<Eigen::VectorXd> gij, ps_ij;
  for (int i = 0; i < n; ++i) {
    gij.clear();
    ps_ij.clear();
    for (int j : g.neighbors()[i]) {
      gij.push_back(bearing(p.segment(i * d, d), p.segment(j * d, d), eps_min));
      ps_ij.push_back(s.p_star.segment(j * d, d) - s.p_star.segment(i * d, d));
    }
    v.segment(i * d, d) =
        agent_control(gij, ps_ij, s.v_star.segment(i * d, d), params);
  }
  return v;
}

ErrorState error_state(const Eigen::VectorXd& p, const Eigen::VectorXd& p_star,
                       const Eigen::VectorXd& p_tilde0, int d) {
  const int n = static_cast<int>(p.size()) / d;
  Eigen::MatrixXd u = translation_basis(n, d);
  ErrorState e;
  e.p_tilde = p - p_star;
  e.delta = e.p_tilde - u * (u.transpose() * p_tilde0) / static_cast<double>(n);
  e.p_bar = u.transpose() * e.p_tilde / static_cast<double>(n);
  return e;
}

double centroid_drift(const SimLog& log) {
  double worst = 0.0;
  for (double v : log.centroid_drift) worst = std::max(worst, v);
  return worst;
}

}  // namespace bfc
