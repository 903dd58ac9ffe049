#include "bfc/linalg.hpp"

#include <stdexcept>

namespace bfc {

MatrixXd kron_identity(const MatrixXd& a, int d) {
  if (d < 1) throw std::invalid_argument("kron_identity: d must be >= 1");
  MatrixXd out = MatrixXd::Zero(a.rows() * d, a.cols() * d);
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (a(r, c) != 0.0)
        out.block(r * d, c * d, d, d) = a(r, c) * MatrixXd::Identity(d, d);
  return out;
}

int numerical_rank(const MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double tol = rel_tol * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rank;
  return rank;
}

MatrixXd translation_basis(int n, int d) {
  MatrixXd u(n * d, d);
  for (int i = 0; i < n; ++i) u.block(i * d, 0, d, d) = MatrixXd::Identity(d, d);
  return u;
}

MatrixXd orthonormal_complement(const MatrixXd& b) {
  const Eigen::Index rows = b.rows(), cols = b.cols();
  if (cols >= rows) throw std::invalid_argument("orthonormal_complement: no complement");
  Eigen::HouseholderQR<MatrixXd> qr(b);
  MatrixXd q = qr.householderQ() * MatrixXd::Identity(rows, rows);
  return q.rightCols(rows - cols);
}

MatrixXd orthonormalize(const MatrixXd& b, double rel_tol) {
  Eigen::JacobiSVD<MatrixXd> svd(b, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return MatrixXd(b.rows(), 0);
  const double tol = rel_tol * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rank;
  return svd.matrixU().leftCols(rank);
}

double max_principal_angle(const MatrixXd& q1, const MatrixXd& q2) {
  if (q1.cols() != q2.cols() || q1.rows() != q2.rows())
    throw std::invalid_argument("max_principal_angle: dimension mismatch");
  if (q1.cols() == 0) return 0.0;
  // sin(theta_max) = || (I - Q1 Q1^T) Q2 ||_2
  MatrixXd residual = q2 - q1 * (q1.transpose() * q2);
  Eigen::JacobiSVD<MatrixXd> svd(residual);
  double s = svd.singularValues()(0);
  if (s > 1.0) s = 1.0;
  if (s < 0.0) s = 0.0;
  return std::asin(s);
}

double min_eigenvalue(const MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace bfc
