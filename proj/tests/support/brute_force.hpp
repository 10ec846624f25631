#pragma once

// Brute-force reference computations used only by the tests. They avoid the
// SVD/eigen-solver paths of the library on purpose.

#include <Eigen/Core>

#include <cmath>
#include <utility>
#include <vector>

namespace schrogeo::testing {

// Rank by Gaussian elimination with partial pivoting; pivots below
// tol * max|entry| are treated as zero.
inline int gauss_rank(Eigen::MatrixXd m, double tol = 1e-10) {
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = rank;
    for (Eigen::Index r = rank; r < m.rows(); ++r) {
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    }
    if (std::abs(m(pivot, col)) <= tol * scale) continue;
    m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < m.rows(); ++r) {
      m.row(r) -= (m(r, col) / m(rank, col)) * m.row(rank);
    }
    ++rank;
  }
  return rank;
}

// Characteristic polynomial coefficients c_0..c_n of det(x I - M) (c_n = 1)
// by the Faddeev-LeVerrier recursion.
inline std::vector<double> charpoly(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  std::vector<double> c(static_cast<std::size_t>(n + 1), 0.0);
  c[static_cast<std::size_t>(n)] = 1.0;
  Eigen::MatrixXd mk = Eigen::MatrixXd::Zero(n, n);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = m * mk + c[static_cast<std::size_t>(n - k + 1)] * id;
    c[static_cast<std::size_t>(n - k)] = -(m * mk).trace() / static_cast<double>(k);
  }
  return c;
}

// Number of negative roots of a real-rooted polynomial: sign changes of
// p(-x) (Descartes' rule is exact when all roots are real).
inline int negative_roots(const std::vector<double>& c, double zero_tol = 0.0) {
  int changes = 0;
  int last = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double v = (k % 2 == 1 ? -c[k] : c[k]);
    if (std::abs(v) <= zero_tol) continue;
    const int sign = v > 0 ? 1 : -1;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

}  // namespace schrogeo::testing
