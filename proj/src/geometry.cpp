#include "bfc/geometry.hpp"

#include <cmath>
#include <string>

#include "bfc/errors.hpp"
#include "bfc/linalg.hpp"

namespace bfc {

Configuration::Configuration(int d, Eigen::VectorXd p_in) : d(d), p(std::move(p_in)) {
  if (d < 2) throw std::invalid_argument("Configuration: d must be >= 2");
  if (p.size() % d != 0)
    throw std::invalid_argument("Configuration: length " + std::to_string(p.size()) +
                                " is not a multiple of d=" + std::to_string(d));
}

Eigen::MatrixXd projector(const Eigen::VectorXd& y) {
  if (std::abs(y.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("projector: input is not a unit vector (norm " +
                                std::to_string(y.norm()) + ")");
  return Eigen::MatrixXd::Identity(y.size(), y.size()) - y * y.transpose();
}

Eigen::VectorXd bearing(const Eigen::VectorXd& p_i, const Eigen::VectorXd& p_j,
                        double eps_min) {
  Eigen::VectorXd diff = p_j - p_i;
  const double len = diff.norm();
  if (len <= eps_min)
    throw CoincidentAgents("bearing undefined: separation " + std::to_string(len) +
                           " <= " + std::to_string(eps_min));
  return diff / len;
}

EdgeGeometry edge_geometry(const Configuration& cfg, const IncidenceMatrix& inc,
                           double eps_min) {
  const int d = cfg.d;
  const int m = static_cast<int>(inc.H.rows());
  EdgeGeometry out;
  out.e = inc.Hbar * cfg.p;
  out.g.resize(m * d);
  out.Pi = Eigen::MatrixXd::Zero(m * d, m * d);
  for (int k = 0; k < m; ++k) {
    Eigen::VectorXd ek = out.e.segment(k * d, d);
    const double len = ek.norm();
    if (len <= eps_min)
      throw CoincidentAgents("edge " + std::to_string(k) + " has length " +
                                 std::to_string(len) + " <= " + std::to_string(eps_min),
                             k);
    Eigen::VectorXd gk = ek / len;
    out.g.segment(k * d, d) = gk;
    out.Pi.block(k * d, k * d, d, d) =
        Eigen::MatrixXd::Identity(d, d) - gk * gk.transpose();
  }
  return out;
}

Eigen::MatrixXd bearing_laplacian(const Configuration& cfg, const IncidenceMatrix& inc,
                                  double eps_min) {
  EdgeGeometry geom = edge_geometry(cfg, inc, eps_min);
  return inc.Hbar.transpose() * geom.Pi * inc.Hbar;
}

NullSpaceReport null_space_analysis(const Eigen::MatrixXd& l_b, const Configuration& cfg,
                                    double angle_tol) {
  const int d = cfg.d, n = cfg.agent_count();
  const int dn = d * n;
  NullSpaceReport rep;
  rep.max_rank = dn - d - 1;

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(l_b, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double tol = (sv.size() > 0 ? 1e-9 * sv(0) : 0.0);
  rep.rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rep.rank;
  rep.null_basis = svd.matrixV().rightCols(dn - rep.rank);
  rep.is_maximal = (rep.rank == rep.max_rank);

  if (rep.is_maximal) {
    Eigen::MatrixXd span_u_p(dn, d + 1);
    span_u_p.leftCols(d) = translation_basis(n, d);
    span_u_p.col(d) = cfg.p;
    Eigen::MatrixXd q = orthonormalize(span_u_p);
    if (q.cols() == rep.null_basis.cols()) {
      rep.angle_to_span_u_p = max_principal_angle(q, rep.null_basis);
      rep.null_is_span_u_p = rep.angle_to_span_u_p < angle_tol;
    }
  }
  return rep;
}

}  // namespace bfc
