#pragma once

#include <Eigen/Dense>

namespace bfc {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// A ⊗ I_d.
MatrixXd kron_identity(const MatrixXd& a, int d);

/// Numerical rank: number of singular values above rel_tol * sigma_max.
int numerical_rank(const MatrixXd& m, double rel_tol = 1e-9);

/// U = 1_n ⊗ I_d, the dn×d basis of uniform translations (unnormalized).
MatrixXd translation_basis(int n, int d);

/// Orthonormal basis of the orthogonal complement of range(b).
/// b must have full column rank.
MatrixXd orthonormal_complement(const MatrixXd& b);

/// Orthonormal basis of range(b), rank-revealing.
MatrixXd orthonormalize(const MatrixXd& b, double rel_tol = 1e-9);

/// Largest principal angle between two subspaces given by orthonormal bases
/// of equal column count. Computed through the sine (residual) route, which
/// stays accurate for angles near zero.
double max_principal_angle(const MatrixXd& q1, const MatrixXd& q2);

/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const MatrixXd& sym);

}  // namespace bfc
