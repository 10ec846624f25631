#include "schrogeo/numkernel/linalg.hpp"

#include <cmath>
#include <string>

#include "schrogeo/errors.hpp"

namespace schrogeo {

RankNullspace rank_nullspace(const Eigen::MatrixXd& m, double tol) {
  if (!(tol > 0.0)) throw ContractViolation("rank_nullspace: tolerance must be positive");
  RankNullspace out;
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0 || m.size() == 0 || m.cwiseAbs().maxCoeff() == 0.0) {
    out.rank = 0;
    out.nullspace = Eigen::MatrixXd::Identity(cols, cols);
    out.singular_values = Eigen::VectorXd::Zero(std::min(m.rows(), cols));
    return out;
  }
  // Full V is needed for the nullspace of wide matrices.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  out.singular_values = svd.singularValues();
  const double cutoff = tol * out.singular_values[0];
  for (Eigen::Index i = 0; i < out.singular_values.size(); ++i) {
    if (out.singular_values[i] > cutoff) ++out.rank;
  }
  out.nullspace = svd.matrixV().rightCols(cols - out.rank);
  return out;
}

Eigen::VectorXd sym_eigen(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw ContractViolation("sym_eigen: matrix is not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale) {
    throw ContractViolation("sym_eigen: matrix is not symmetric (asymmetry " +
                            std::to_string(asym) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Eigen::Index negative_index(const Eigen::MatrixXd& m) {
  const Eigen::VectorXd ev = sym_eigen(m);
  return (ev.array() < 0.0).count();
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);

  // Exact sum when m is nilpotent (m^n = 0).
  {
    Eigen::MatrixXd power = id;
    Eigen::MatrixXd sum = id;
    double factorial = 1.0;
    bool nilpotent = false;
    for (Eigen::Index k = 1; k <= n; ++k) {
      power = power * m;
      if (power.cwiseAbs().maxCoeff() == 0.0) {
        nilpotent = true;
        break;
      }
      factorial *= static_cast<double>(k);
      sum += power / factorial;
    }
    if (nilpotent) return sum;
  }

  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXd scaled = m / std::ldexp(1.0, squarings);

  // Taylor series until terms fall below 1e-17 relative (||scaled|| <= 0.5).
  Eigen::MatrixXd term = id;
  Eigen::MatrixXd result = id;
  for (int k = 1; k < 40; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-17) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace schrogeo
