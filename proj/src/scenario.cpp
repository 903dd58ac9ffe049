#include "bfc/scenario.hpp"

#include <cmath>
#include <string>

#include "bfc/errors.hpp"
#include "bfc/integrate.hpp"
#include "bfc/linalg.hpp"

namespace bfc {

double Scenario::pe_window() const {
  if (window_T > 0.0) return window_T;
  const double period = rotation_period(motion);
  return period > 0.0 ? period : horizon / 4.0;
}

void Scenario::validate() const {
  if (dt <= 0.0) throw Error("scenario: dt must be positive");
  if (horizon < 0.0) throw Error("scenario: horizon must be >= 0");
  if (control.k_p <= 0.0) throw Error("scenario: k_p must be positive");
  if (window_T > 0.0 && dt > std::min(0.05, window_T / 50.0) + 1e-12)
    throw Error("scenario: dt must be <= min(0.05, T/50) when a PE window is declared");

  const int d = motion.d;
  const int n = graph.vertex_count();
  if (motion.p0.size() != static_cast<Eigen::Index>(n) * d)
    throw Error("scenario: desired configuration has " + std::to_string(motion.p0.size()) +
                " entries, expected " + std::to_string(n * d));
  if (p0.size() != static_cast<Eigen::Index>(n) * d)
    throw Error("scenario: initial configuration has " + std::to_string(p0.size()) +
                " entries, expected " + std::to_string(n * d));

  // Assumption-3 check at t = 0: no coincident neighbours.
  for (int k = 0; k < graph.edge_count(); ++k) {
    const Edge& e = graph.edges()[k];
    const double len = (p0.segment(e.head * d, d) - p0.segment(e.tail * d, d)).norm();
    if (len <= eps_min)
      throw CoincidentAgents("scenario: initial edge " + std::to_string(k) +
                                 " has length " + std::to_string(len),
                             k, 0.0);
  }

  if (require_zero_centroid_error) {
    Eigen::MatrixXd u = translation_basis(n, d);
    Eigen::VectorXd p_tilde0 = p0 - eval(motion, 0.0).p_star;
    const double c = (u.transpose() * p_tilde0).norm();
    if (c > 1e-9)
      throw Error("scenario: declared zero initial centroid error, but ‖Uᵀp̃(0)‖ = " +
                  std::to_string(c));
  }
}

SimLog run_scenario(const Scenario& s) {
  s.validate();
  if (!has_spanning_tree(s.graph))
    throw DisconnectedGraph("scenario: interaction graph has no spanning tree");

  const int d = s.motion.d;
  const int n = s.graph.vertex_count();
  IncidenceMatrix inc = incidence_matrix(s.graph, d);
  Eigen::MatrixXd u = translation_basis(n, d);

  Eigen::VectorXd p_tilde0 = s.p0 - eval(s.motion, 0.0).p_star;
  Eigen::VectorXd centering = u * (u.transpose() * p_tilde0) / static_cast<double>(n);
  Eigen::VectorXd p_bar0 = u.transpose() * p_tilde0 / static_cast<double>(n);

  Rhs rhs = [&](double t, const Eigen::VectorXd& p) {
    return closed_loop_rhs(p, t, s.motion, s.graph, s.control, s.eps_min);
  };

  SimLog log;
  log.d = d;
  const long long steps = static_cast<long long>(std::floor(s.horizon / s.dt + 1e-9));
  log.times.reserve(steps + 1);
  log.states.reserve(steps + 1);

  Eigen::VectorXd x = s.p0;
  double t = 0.0;
  for (long long k = 0;; ++k) {
    // Sample validity: every logged sample keeps all neighbours separated.
    double min_len = std::numeric_limits<double>::infinity();
    for (const Edge& e : s.graph.edges())
      min_len = std::min(min_len,
                         (x.segment(e.head * d, d) - x.segment(e.tail * d, d)).norm());
    if (min_len <= s.eps_min) {
      log.aborted = true;
      log.abort_time = t;
      log.abort_reason = "inter-neighbour distance " + std::to_string(min_len) +
                         " at or below the separation floor at t=" + std::to_string(t);
      break;
    }

    Configuration cfg(d, x);
    EdgeGeometry geom = edge_geometry(cfg, inc, s.eps_min);
    Eigen::VectorXd p_star = eval(s.motion, t).p_star;
    Eigen::VectorXd p_tilde = x - p_star;
    log.times.push_back(t);
    log.states.push_back(x);
    log.p_tilde_norm.push_back(p_tilde.norm());
    log.delta_norm.push_back((p_tilde - centering).norm());
    log.centroid_drift.push_back(
        (u.transpose() * p_tilde / static_cast<double>(n) - p_bar0).norm());
    log.min_edge_dist.push_back(min_len);
    log.bearings.push_back(geom.g);

    if (k >= steps) break;
    try {
      x = rk4_step(rhs, t, x, s.dt);
    } catch (const CoincidentAgents& e) {
      log.aborted = true;
      log.abort_time = t;
      log.abort_reason = e.what();
      break;
    } catch (const SimAborted& e) {
      log.aborted = true;
      log.abort_time = e.time;
      log.abort_reason = e.what();
      break;
    }
    t = static_cast<double>(k + 1) * s.dt;
  }
  return log;
}

}  // namespace bfc
