#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "bfc/geometry.hpp"
#include "bfc/graph.hpp"

namespace bfc {

/// Rotation by omega·t in the coordinate plane spanned by axes (axis_a, axis_b).
/// Sufficient for the planar and z-axis motions the scenarios use, and keeps
/// the velocity analytic.
struct PlanarRotation {
  int axis_a = 0;
  int axis_b = 1;
  double omega = 0.0;  // rad/s

  Eigen::MatrixXd matrix(int d, double t) const;
  Eigen::MatrixXd rate(int d, double t) const;  // dR/dt
};

/// Similarity-transform motion: p*_i(t) = scale·R(t)ᵀ(p0_i − center) + center + drift·t.
/// The override hooks swap in an arbitrary matrix curve; the validity checker
/// uses them to probe non-orthogonal candidates.
struct SimilarityPath {
  PlanarRotation rotation;
  double scale = 1.0;
  Eigen::VectorXd drift;   // d; zero when empty
  Eigen::VectorXd center;  // d; origin when empty
  std::function<Eigen::MatrixXd(double)> rotation_override;
  std::function<Eigen::MatrixXd(double)> rotation_rate_override;

  Eigen::MatrixXd rot(int d, double t) const;
  Eigen::MatrixXd rot_rate(int d, double t) const;
};

/// One agent slides along a fixed ray, origin + s(t)·direction with
/// s(t) = base + amplitude·sin(omega·t); every other agent holds its p0
/// position. Anchoring the ray at a neighbor keeps that edge's bearing
/// constant while exciting the mover's other edges.
struct RayPath {
  int agent = 0;  // 0-based
  Eigen::VectorXd origin;
  Eigen::VectorXd direction;  // unit
  double base = 1.0;
  double amplitude = 0.0;
  double omega = 0.0;
};

/// Arbitrary analytic pair (p*(t), v*(t)); test-construction hook.
struct CustomPath {
  std::function<Eigen::VectorXd(double)> position;
  std::function<Eigen::VectorXd(double)> velocity;
};

/// Time-parameterized desired formation.
struct DesiredMotion {
  int d = 2;
  Eigen::VectorXd p0;  // dn
  std::variant<SimilarityPath, RayPath, CustomPath> path = SimilarityPath{};

  int agent_count() const { return static_cast<int>(p0.size()) / d; }
};

struct MotionSample {
  Eigen::VectorXd p_star;
  Eigen::VectorXd v_star;
};

/// p*(t) and its analytic derivative v*(t).
MotionSample eval(const DesiredMotion& motion, double t);

/// As above, but additionally checks every graph edge of p*(t) against the
/// separation floor; throws DegenerateDesired on violation.
MotionSample eval(const DesiredMotion& motion, double t, const OrientedGraph& g,
                  double eps_min = kDefaultEpsMin);

/// 2π/|omega| for periodic similarity/ray motions, 0 when aperiodic.
double rotation_period(const DesiredMotion& motion);

/// Sampled verification that a motion behaves as a similarity transform:
/// R(t) ∈ SO(d), g*_ij(t) = R(t)ᵀ g*_ij(0) on every edge, and edge lengths
/// above the separation floor.
struct SimilarityCheck {
  bool applicable = false;  // motion is a similarity path
  bool rotation_orthonormal = false;
  double max_orthogonality_defect = 0.0;  // max ‖RᵀR − I‖ and |det−1| over samples
  bool bearings_follow_rotation = false;
  double max_bearing_defect = 0.0;  // max ‖g*(t) − R(t)ᵀg*(0)‖ over samples/edges
  double min_edge_length = 0.0;
  bool min_edge_ok = false;
  bool passed = false;
  std::vector<std::string> violations;
};

SimilarityCheck check_similarity_validity(const DesiredMotion& motion,
                                          const OrientedGraph& g, double horizon,
                                          double dt, double tol = 1e-9,
                                          double eps_min = kDefaultEpsMin);

}  // namespace bfc
