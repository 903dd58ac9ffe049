#pragma once

#include <Eigen/Dense>

#include "bfc/graph.hpp"

namespace bfc {

/// Separation floor below which bearings are treated as undefined
/// (occlusion/collision guard).
inline constexpr double kDefaultEpsMin = 1e-6;

/// Stacked agent positions p = [p_1ᵀ, …, p_nᵀ]ᵀ ∈ R^{dn}.
struct Configuration {
  int d = 2;
  Eigen::VectorXd p;

  Configuration() = default;
  Configuration(int d, Eigen::VectorXd p);

  int agent_count() const { return static_cast<int>(p.size()) / d; }
  Eigen::VectorXd agent(int i) const { return p.segment(i * d, d); }
};

/// π_y = I_d − y yᵀ: orthogonal projection onto the complement of y.
/// y must be unit within 1e−9.
Eigen::MatrixXd projector(const Eigen::VectorXd& y);

/// Unit bearing from p_i toward p_j. Throws CoincidentAgents when the
/// separation is at or below eps_min.
Eigen::VectorXd bearing(const Eigen::VectorXd& p_i, const Eigen::VectorXd& p_j,
                        double eps_min = kDefaultEpsMin);

/// Per-edge geometry of a formation: edge vectors e = H̄p, unit bearings g_k,
/// and the block-diagonal projector stack Π = blkdiag(π_{g_k}).
struct EdgeGeometry {
  Eigen::VectorXd e;   // dm
  Eigen::VectorXd g;   // dm, unit blocks
  Eigen::MatrixXd Pi;  // dm×dm
};

EdgeGeometry edge_geometry(const Configuration& cfg, const IncidenceMatrix& inc,
                           double eps_min = kDefaultEpsMin);

/// Bearing Laplacian L_B = H̄ᵀ Π H̄. Symmetric PSD with
/// Span{U, p} ⊆ Null(L_B), hence rank ≤ dn−d−1.
Eigen::MatrixXd bearing_laplacian(const Configuration& cfg, const IncidenceMatrix& inc,
                                  double eps_min = kDefaultEpsMin);

/// Rank / null-space structure of a bearing Laplacian.
struct NullSpaceReport {
  int rank = 0;
  int max_rank = 0;          // dn − d − 1
  bool is_maximal = false;   // rank == max_rank
  Eigen::MatrixXd null_basis;
  /// Largest principal angle between Null(L_B) and Span{U, p}; meaningful
  /// when is_maximal.
  double angle_to_span_u_p = 0.0;
  bool null_is_span_u_p = false;
};

NullSpaceReport null_space_analysis(const Eigen::MatrixXd& l_b, const Configuration& cfg,
                                    double angle_tol = 1e-8);

}  // namespace bfc
