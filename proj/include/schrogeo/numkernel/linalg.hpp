#pragma once

#include <Eigen/Dense>

namespace schrogeo {

inline constexpr double kDefaultRankTol = 1e-10;

struct RankNullspace {
  Eigen::Index rank = 0;
  // Orthonormal columns spanning ker(M).
  Eigen::MatrixXd nullspace;
  Eigen::VectorXd singular_values;
};

// Numerical rank: singular values above tol * sigma_max count. The zero
// matrix has rank 0 and its nullspace is the whole domain.
RankNullspace rank_nullspace(const Eigen::MatrixXd& m, double tol = kDefaultRankTol);

// Ascending spectrum of a symmetric matrix. Throws ContractViolation when M
// is not symmetric to 1e-12 (relative to its largest entry).
Eigen::VectorXd sym_eigen(const Eigen::MatrixXd& m);

// Number of negative eigenvalues of a symmetric matrix.
Eigen::Index negative_index(const Eigen::MatrixXd& m);

// Matrix exponential by scaling and squaring of a Taylor series. Nilpotent
// inputs are summed exactly.
Eigen::MatrixXd expm(const Eigen::MatrixXd& m);

// Frobenius-norm commutator [a, b] = ab - ba.
inline Eigen::MatrixXd commutator(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return a * b - b * a;
}

}  // namespace schrogeo
