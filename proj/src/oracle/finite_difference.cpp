#include "schrogeo/oracle/finite_difference.hpp"

#include <Eigen/LU>

#include <algorithm>

namespace schrogeo::oracle {
namespace {

using VecMap = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

Eigen::VectorXd central(const VecMap& f, const Eigen::VectorXd& p, Eigen::Index i, double h) {
  Eigen::VectorXd a = p, b = p;
  a[i] += h;
  b[i] -= h;
  return (f(a) - f(b)) / (2.0 * h);
}

Eigen::VectorXd richardson(const VecMap& f, const Eigen::VectorXd& p, Eigen::Index i, double h) {
  return (4.0 * central(f, p, i, 0.5 * h) - central(f, p, i, h)) / 3.0;
}

Eigen::VectorXd flatten(const Eigen::MatrixXd& m) {
  return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
}

Eigen::VectorXd flatten(const Array3& a) {
  const Eigen::Index n = a.dim();
  Eigen::VectorXd v(n * n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) v[(i * n + j) * n + k] = a(i, j, k);
  return v;
}

}  // namespace

Eigen::MatrixXd fd_jacobian(const VecMap& f, const Eigen::VectorXd& p, double h) {
  const Eigen::VectorXd f0 = f(p);
  Eigen::MatrixXd jac(p.size(), f0.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) jac.row(i) = richardson(f, p, i, h).transpose();
  return jac;
}

Array3 fd_christoffel(const MetricField& m, const Eigen::VectorXd& p, double h) {
  const Eigen::Index n = p.size();
  const VecMap gram = [&m](const Eigen::VectorXd& q) { return flatten(m.gram(q)); };
  const Eigen::MatrixXd jac = fd_jacobian(gram, p, h);  // jac(c, a + n b) = d_c g_ab
  const Eigen::MatrixXd g = m.gram(p);
  const Eigen::MatrixXd ginv = g.inverse();
  auto dg = [&](Eigen::Index c, Eigen::Index a, Eigen::Index b) { return jac(c, a + n * b); };
  Array3 gamma(n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      for (Eigen::Index c = 0; c < n; ++c) {
        double v = 0.0;
        for (Eigen::Index d = 0; d < n; ++d) {
          v += 0.5 * ginv(a, d) * (dg(b, d, c) + dg(c, d, b) - dg(d, b, c));
        }
        gamma(a, b, c) = v;
      }
  return gamma;
}

Eigen::MatrixXd fd_ricci(const MetricField& m, const Eigen::VectorXd& p, double h) {
  const Eigen::Index n = p.size();
  const VecMap gamma_flat = [&m, h](const Eigen::VectorXd& q) {
    return flatten(fd_christoffel(m, q, h));
  };
  const Eigen::MatrixXd dgam = fd_jacobian(gamma_flat, p, std::max(h, kFdOuterStep));  // dgam(e, (a n + b) n + c)
  const Array3 gamma = fd_christoffel(m, p, h);
  auto dg = [&](Eigen::Index e, Eigen::Index a, Eigen::Index b, Eigen::Index c) {
    return dgam(e, (a * n + b) * n + c);
  };
  Eigen::MatrixXd ricci = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index b = 0; b < n; ++b)
    for (Eigen::Index c = 0; c < n; ++c) {
      double v = 0.0;
      for (Eigen::Index a = 0; a < n; ++a) {
        v += dg(a, a, b, c) - dg(c, a, a, b);
        for (Eigen::Index d = 0; d < n; ++d) {
          v += gamma(a, a, d) * gamma(d, b, c) - gamma(a, c, d) * gamma(d, a, b);
        }
      }
      ricci(b, c) = v;
    }
  return ricci;
}

Eigen::MatrixXd fd_covariant_derivative(const MetricField& m, const OneForm& w,
                                        const Eigen::VectorXd& p, double h) {
  const VecMap wf = [&w](const Eigen::VectorXd& q) { return w(q); };
  Eigen::MatrixXd out = fd_jacobian(wf, p, h);
  const Array3 gamma = fd_christoffel(m, p, h);
  const Eigen::VectorXd wv = w(p);
  const Eigen::Index n = p.size();
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      for (Eigen::Index c = 0; c < n; ++c) out(a, b) -= gamma(c, a, b) * wv[c];
  return out;
}

double fd_laplacian(const MetricField& m, const ScalarField& f, const Eigen::VectorXd& p, double h) {
  const Eigen::Index n = p.size();
  const VecMap grad = [&f, h, n](const Eigen::VectorXd& q) {
    const VecMap fv = [&f](const Eigen::VectorXd& x) {
      return Eigen::VectorXd::Constant(1, f(x));
    };
    return Eigen::VectorXd(fd_jacobian(fv, q, h).col(0));
  };
  const Eigen::MatrixXd hess = fd_jacobian(grad, p, std::max(h, kFdOuterStep));
  const Eigen::VectorXd df = grad(p);
  const Array3 gamma = fd_christoffel(m, p, h);
  const Eigen::MatrixXd ginv = m.gram(p).inverse();
  double out = 0.0;
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      double hab = 0.5 * (hess(a, b) + hess(b, a));
      for (Eigen::Index c = 0; c < n; ++c) hab -= gamma(c, a, b) * df[c];
      out += ginv(a, b) * hab;
    }
  return out;
}

}  // namespace schrogeo::oracle
