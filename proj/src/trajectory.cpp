#include "bfc/trajectory.hpp"

#include <cmath>

#include "bfc/errors.hpp"

namespace bfc {

Eigen::MatrixXd PlanarRotation::matrix(int d, double t) const {
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(d, d);
  const double c = std::cos(omega * t), s = std::sin(omega * t);
  r(axis_a, axis_a) = c;
  r(axis_a, axis_b) = -s;
  r(axis_b, axis_a) = s;
  r(axis_b, axis_b) = c;
  return r;
}

Eigen::MatrixXd PlanarRotation::rate(int d, double t) const {
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(d, d);
  const double c = std::cos(omega * t), s = std::sin(omega * t);
  r(axis_a, axis_a) = -omega * s;
  r(axis_a, axis_b) = -omega * c;
  r(axis_b, axis_a) = omega * c;
  r(axis_b, axis_b) = -omega * s;
  return r;
}

Eigen::MatrixXd SimilarityPath::rot(int d, double t) const {
  return rotation_override ? rotation_override(t) : rotation.matrix(d, t);
}

Eigen::MatrixXd SimilarityPath::rot_rate(int d, double t) const {
  return rotation_rate_override ? rotation_rate_override(t) : rotation.rate(d, t);
}

namespace {

double ray_s(const RayPath& ray, double t) {
  return ray.base + ray.amplitude * std::sin(ray.omega * t);
}

double ray_s_dot(const RayPath& ray, double t) {
  return ray.amplitude * ray.omega * std::cos(ray.omega * t);
}

}  // namespace

MotionSample eval(const DesiredMotion& motion, double t) {
  const int d = motion.d;
  const int n = motion.agent_count();
  MotionSample out;

  if (const auto* sim = std::get_if<SimilarityPath>(&motion.path)) {
    Eigen::VectorXd center =
        sim->center.size() == d ? sim->center : Eigen::VectorXd::Zero(d);
    Eigen::VectorXd drift = sim->drift.size() == d ? sim->drift : Eigen::VectorXd::Zero(d);
    Eigen::MatrixXd rt = sim->rot(d, t).transpose();
    Eigen::MatrixXd rt_dot = sim->rot_rate(d, t).transpose();
    out.p_star.resize(n * d);
    out.v_star.resize(n * d);
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd q = motion.p0.segment(i * d, d) - center;
      out.p_star.segment(i * d, d) = sim->scale * (rt * q) + center + drift * t;
      out.v_star.segment(i * d, d) = sim->scale * (rt_dot * q) + drift;
    }
    return out;
  }

  if (const auto* ray = std::get_if<RayPath>(&motion.path)) {
    out.p_star = motion.p0;
    out.v_star = Eigen::VectorXd::Zero(n * d);
    out.p_star.segment(ray->agent * d, d) = ray->origin + ray_s(*ray, t) * ray->direction;
    out.v_star.segment(ray->agent * d, d) = ray_s_dot(*ray, t) * ray->direction;
    return out;
  }

  const auto& custom = std::get<CustomPath>(motion.path);
  out.p_star = custom.position(t);
  out.v_star = custom.velocity(t);
  return out;
}

MotionSample eval(const DesiredMotion& motion, double t, const OrientedGraph& g,
                  double eps_min) {
  MotionSample s = eval(motion, t);
  const int d = motion.d;
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    const double len =
        (s.p_star.segment(e.head * d, d) - s.p_star.segment(e.tail * d, d)).norm();
    if (len <= eps_min)
      throw DegenerateDesired("desired edge " + std::to_string(k) + " has length " +
                              std::to_string(len) + " <= " + std::to_string(eps_min) +
                              " at t=" + std::to_string(t));
  }
  return s;
}

double rotation_period(const DesiredMotion& motion) {
  if (const auto* sim = std::get_if<SimilarityPath>(&motion.path)) {
    if (sim->rotation_override) return 0.0;
    if (sim->rotation.omega != 0.0) return 2.0 * M_PI / std::abs(sim->rotation.omega);
    return 0.0;
  }
  if (const auto* ray = std::get_if<RayPath>(&motion.path))
    return ray->omega != 0.0 ? 2.0 * M_PI / std::abs(ray->omega) : 0.0;
  return 0.0;
}

SimilarityCheck check_similarity_validity(const DesiredMotion& motion,
                                          const OrientedGraph& g, double horizon,
                                          double dt, double tol, double eps_min) {
  SimilarityCheck rep;
  const int d = motion.d;
  const auto* sim = std::get_if<SimilarityPath>(&motion.path);
  rep.applicable = sim != nullptr;
  if (!rep.applicable) {
    rep.violations.push_back("motion is not a similarity path; rotation checks skipped");
    return rep;
  }

  const int steps = static_cast<int>(std::llround(horizon / dt));
  MotionSample s0 = eval(motion, 0.0);
  std::vector<Eigen::VectorXd> g0(g.edge_count());
  bool g0_ok = true;
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    Eigen::VectorXd diff = s0.p_star.segment(e.head * d, d) - s0.p_star.segment(e.tail * d, d);
    if (diff.norm() <= eps_min) {
      g0_ok = false;
      break;
    }
    g0[k] = diff.normalized();
  }

  rep.min_edge_length = std::numeric_limits<double>::infinity();
  double orth_defect = 0.0, bearing_defect = 0.0;
  for (int step = 0; step <= steps; ++step) {
    const double t = step * dt;
    Eigen::MatrixXd r = sim->rot(d, t);
    orth_defect = std::max(orth_defect,
                           (r.transpose() * r - Eigen::MatrixXd::Identity(d, d)).norm());
    orth_defect = std::max(orth_defect, std::abs(r.determinant() - 1.0));
    MotionSample s = eval(motion, t);
    for (int k = 0; k < g.edge_count(); ++k) {
      const Edge& e = g.edges()[k];
      Eigen::VectorXd diff =
          s.p_star.segment(e.head * d, d) - s.p_star.segment(e.tail * d, d);
      const double len = diff.norm();
      rep.min_edge_length = std::min(rep.min_edge_length, len);
      if (g0_ok && len > eps_min)
        bearing_defect =
            std::max(bearing_defect, (diff / len - r.transpose() * g0[k]).norm());
    }
  }

  rep.max_orthogonality_defect = orth_defect;
  rep.rotation_orthonormal = orth_defect <= tol;
  rep.max_bearing_defect = bearing_defect;
  rep.bearings_follow_rotation = g0_ok && bearing_defect <= tol;
  rep.min_edge_ok = rep.min_edge_length > eps_min;

  if (!rep.rotation_orthonormal)
    rep.violations.push_back("rotation is not orthonormal with det +1 (defect " +
                             std::to_string(orth_defect) + ")");
  if (!rep.bearings_follow_rotation)
    rep.violations.push_back("bearings deviate from R(t)^T g*(0) (defect " +
                             std::to_string(bearing_defect) + ")");
  if (!rep.min_edge_ok)
    rep.violations.push_back("desired edge length " + std::to_string(rep.min_edge_length) +
                             " at or below the separation floor");
  rep.passed = rep.violations.empty();
  return rep;
}

}  // namespace bfc
