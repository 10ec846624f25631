#include "schrogeo/geometry/tensor_calculus.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "schrogeo/errors.hpp"

namespace schrogeo {

Chart::Chart(std::vector<std::string> names, Predicate singular)
    : names_(std::move(names)), singular_(std::move(singular)) {
  if (names_.size() < 2) throw ContractViolation("Chart: dimension must be at least 2");
  std::set<std::string> unique(names_.begin(), names_.end());
  if (unique.size() != names_.size()) throw ContractViolation("Chart: coordinate names must be distinct");
}

Eigen::Index Chart::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw ContractViolation("Chart: unknown coordinate " + name);
  return static_cast<Eigen::Index>(it - names_.begin());
}

Chart Chart::bargmann(int d) {
  std::vector<std::string> names;
  for (int i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
  names.emplace_back("t");
  names.emplace_back("s");
  return Chart(std::move(names));
}

Chart Chart::bulk(int d) {
  std::vector<std::string> names;
  for (int i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
  names.emplace_back("t");
  names.emplace_back("s");
  names.emplace_back("r");
  const Eigen::Index r = d + 2;
  return Chart(std::move(names), [r](const Eigen::VectorXd& p) { return std::abs(p[r]) <= 1e-12; });
}

MetricField MetricField::rescaled(const ScalarField& omega) const {
  const MetricField base = *this;
  return MetricField(
      chart_, signature_,
      [base, omega](const Eigen::VectorXd& p) -> Eigen::MatrixXd {
        const double o = omega(p);
        return o * o * base.gram(p);
      },
      [base, omega](const VecX<Jet2>& p) -> MatX<Jet2> {
        const Jet2 o = omega(p);
        const Jet2 o2 = o * o;
        MatX<Jet2> g = base.gram(p);
        for (Eigen::Index i = 0; i < g.rows(); ++i)
          for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = o2 * g(i, j);
        return g;
      });
}

double Array3::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

MetricJet metric_jet(const MetricField& m, const Eigen::VectorXd& p) {
  if (m.chart().is_singular(p)) throw DegenerateMetric("degenerate metric: point on the singular locus");
  const Eigen::Index n = p.size();
  const MatX<Jet2> gj = m.gram(seed_jets(p));
  MetricJet out;
  out.g.resize(n, n);
  out.dg.assign(static_cast<std::size_t>(n), Eigen::MatrixXd(n, n));
  out.ddg.assign(static_cast<std::size_t>(n * n), Eigen::MatrixXd());
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const Jet2& e = gj(a, b);
      out.g(a, b) = e.value();
      const Eigen::VectorXd grad = e.grad(n);
      for (Eigen::Index c = 0; c < n; ++c) out.dg[static_cast<std::size_t>(c)](a, b) = grad[c];
      out.ddg[static_cast<std::size_t>(a * n + b)] = e.hess(n);
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(out.g);
  const double scale = out.g.cwiseAbs().maxCoeff();
  if (scale == 0.0 || !lu.isInvertible() ||
      std::abs(lu.determinant()) <= 1e-300) {
    throw DegenerateMetric("degenerate metric: Gram matrix is singular");
  }
  out.ginv = lu.inverse();
  return out;
}

Array3 christoffel(const MetricJet& mj) {
  const Eigen::Index n = mj.g.rows();
  // First-kind symbols [d; b c] = 1/2 (d_b g_dc + d_c g_db - d_d g_bc).
  Array3 first(n);
  for (Eigen::Index d = 0; d < n; ++d)
    for (Eigen::Index b = 0; b < n; ++b)
      for (Eigen::Index c = b; c < n; ++c) {
        const double v = 0.5 * (mj.dg[b](d, c) + mj.dg[c](d, b) - mj.dg[d](b, c));
        first(d, b, c) = v;
        first(d, c, b) = v;
      }
  Array3 gamma(n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      for (Eigen::Index c = b; c < n; ++c) {
        double v = 0.0;
        for (Eigen::Index d = 0; d < n; ++d) v += mj.ginv(a, d) * first(d, b, c);
        gamma(a, b, c) = v;
        gamma(a, c, b) = v;
      }
  return gamma;
}

Array3 christoffel(const MetricField& m, const Eigen::VectorXd& p) {
  return christoffel(metric_jet(m, p));
}

RicciResult ricci_scalar(const MetricField& m, const Eigen::VectorXd& p) {
  const MetricJet mj = metric_jet(m, p);
  const Eigen::Index n = p.size();
  const Array3 gamma = christoffel(mj);

  // d_e g^{ad} = -g^{ap} d_e g_pq g^{qd}
  std::vector<Eigen::MatrixXd> dginv(static_cast<std::size_t>(n));
  for (Eigen::Index e = 0; e < n; ++e) dginv[e] = -mj.ginv * mj.dg[e] * mj.ginv;

  // dgamma(e)(a, b, c) = d_e Gamma^a_bc
  std::vector<Array3> dgamma(static_cast<std::size_t>(n), Array3(n));
  for (Eigen::Index e = 0; e < n; ++e) {
    for (Eigen::Index b = 0; b < n; ++b) {
      for (Eigen::Index c = b; c < n; ++c) {
        // S_d = d_b g_dc + d_c g_db - d_d g_bc and its e-derivative.
        Eigen::VectorXd s(n), ds(n);
        for (Eigen::Index d = 0; d < n; ++d) {
          s[d] = mj.dg[b](d, c) + mj.dg[c](d, b) - mj.dg[d](b, c);
          ds[d] = mj.ddg[d * n + c](e, b) + mj.ddg[d * n + b](e, c) - mj.ddg[b * n + c](e, d);
        }
        for (Eigen::Index a = 0; a < n; ++a) {
          const double v = 0.5 * (dginv[e].row(a).dot(s) + mj.ginv.row(a).dot(ds));
          dgamma[e](a, b, c) = v;
          dgamma[e](a, c, b) = v;
        }
      }
    }
  }

  RicciResult out;
  out.ricci = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index b = 0; b < n; ++b) {
    for (Eigen::Index c = b; c < n; ++c) {
      double v = 0.0;
      for (Eigen::Index a = 0; a < n; ++a) {
        v += dgamma[a](a, b, c) - dgamma[c](a, a, b);
        for (Eigen::Index d = 0; d < n; ++d) {
          v += gamma(a, a, d) * gamma(d, b, c) - gamma(a, c, d) * gamma(d, a, b);
        }
      }
      out.ricci(b, c) = v;
      out.ricci(c, b) = v;
    }
  }
  out.scalar = (mj.ginv.cwiseProduct(out.ricci)).sum();
  return out;
}

Array3 metricity(const MetricField& m, const Eigen::VectorXd& p) {
  const MetricJet mj = metric_jet(m, p);
  const Array3 gamma = christoffel(mj);
  const Eigen::Index n = p.size();
  Array3 out(n);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b) {
        double v = mj.dg[c](a, b);
        for (Eigen::Index d = 0; d < n; ++d) {
          v -= gamma(d, c, a) * mj.g(d, b) + gamma(d, c, b) * mj.g(a, d);
        }
        out(c, a, b) = v;
      }
  return out;
}

Eigen::MatrixXd covariant_derivative(const MetricField& m, const OneForm& w,
                                     const Eigen::VectorXd& p) {
  const Array3 gamma = christoffel(m, p);
  const Eigen::VectorXd wv = w(p);
  Eigen::MatrixXd out = w.first_derivatives(p);
  const Eigen::Index n = p.size();
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      for (Eigen::Index c = 0; c < n; ++c) out(a, b) -= gamma(c, a, b) * wv[c];
  return out;
}

Eigen::MatrixXd covariant_derivative(const MetricField& m, const VectorField& v,
                                     const Eigen::VectorXd& p) {
  const Array3 gamma = christoffel(m, p);
  const Eigen::VectorXd vv = v(p);
  Eigen::MatrixXd out = v.first_derivatives(p);
  const Eigen::Index n = p.size();
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      for (Eigen::Index c = 0; c < n; ++c) out(a, b) += gamma(b, a, c) * vv[c];
  return out;
}

Eigen::MatrixXd lie_derivative_metric(const MetricField& m, const VectorField& z,
                                      const Eigen::VectorXd& p) {
  const MetricJet mj = metric_jet(m, p);
  const Eigen::VectorXd zv = z(p);
  const Eigen::MatrixXd dz = z.first_derivatives(p);  // dz(a, c) = d_a Z^c
  const Eigen::Index n = p.size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) out += zv[c] * mj.dg[c];
  // g_cb d_a Z^c + g_ac d_b Z^c
  const Eigen::MatrixXd t = dz * mj.g;  // t(a, b) = d_a Z^c g_cb
  out += t + t.transpose();
  return out;
}

ConformalDeviation conformal_deviation(const MetricField& m, const VectorField& z,
                                       const Eigen::VectorXd& p) {
  const Eigen::MatrixXd g = m.gram(p);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(g);
  if (!lu.isInvertible()) throw DegenerateMetric("degenerate metric: Gram matrix is singular");
  const Eigen::MatrixXd lg = lie_derivative_metric(m, z, p);
  ConformalDeviation out;
  out.phi = (lu.inverse() * lg).trace() / static_cast<double>(p.size());
  out.residual = (lg - out.phi * g).norm() / g.norm();
  return out;
}

Eigen::VectorXd lie_bracket(const VectorField& x, const VectorField& y, const Eigen::VectorXd& p) {
  const Eigen::VectorXd xv = x(p);
  const Eigen::VectorXd yv = y(p);
  const Eigen::MatrixXd dx = x.first_derivatives(p);  // dx(b, a) = d_b X^a
  const Eigen::MatrixXd dy = y.first_derivatives(p);
  return dy.transpose() * xv - dx.transpose() * yv;
}

double divergence(const MetricField& m, const VectorField& x, const Eigen::VectorXd& p) {
  const Array3 gamma = christoffel(m, p);
  const Eigen::VectorXd xv = x(p);
  const Eigen::MatrixXd dx = x.first_derivatives(p);
  double div = dx.trace();
  const Eigen::Index n = p.size();
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) div += gamma(a, a, b) * xv[b];
  return div;
}

Eigen::MatrixXd wedge(const Eigen::VectorXd& w, const Eigen::VectorXd& v) {
  return w * v.transpose() - v * w.transpose();
}

WedgeResult exterior_wedge(const OneForm& w, const Eigen::VectorXd& p) {
  const Eigen::VectorXd wv = w(p);
  const Eigen::MatrixXd dw = w.first_derivatives(p);  // dw(a, b) = d_a w_b
  WedgeResult out;
  out.d_omega = dw - dw.transpose();
  const Eigen::Index n = p.size();
  out.omega_wedge_d_omega = Array3(n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      for (Eigen::Index c = 0; c < n; ++c) {
        out.omega_wedge_d_omega(a, b, c) =
            wv[a] * out.d_omega(b, c) + wv[b] * out.d_omega(c, a) + wv[c] * out.d_omega(a, b);
      }
  return out;
}

double laplacian(const MetricField& m, const Jet2& f, const Eigen::VectorXd& p) {
  const MetricJet mj = metric_jet(m, p);
  const Array3 gamma = christoffel(mj);
  const Eigen::Index n = p.size();
  const Eigen::VectorXd df = f.grad(n);
  const Eigen::MatrixXd ddf = f.hess(n);
  double out = 0.0;
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      double hab = ddf(a, b);
      for (Eigen::Index c = 0; c < n; ++c) hab -= gamma(c, a, b) * df[c];
      out += mj.ginv(a, b) * hab;
    }
  return out;
}

double laplacian(const MetricField& m, const ScalarField& f, const Eigen::VectorXd& p) {
  return laplacian(m, f.jet_at(p), p);
}

double yamabe_residual(const MetricField& m, const Jet2& f, const Eigen::VectorXd& p) {
  const double n = static_cast<double>(p.size());
  const double r = ricci_scalar(m, p).scalar;
  return laplacian(m, f, p) - (n - 2.0) / (4.0 * (n - 1.0)) * r * f.value();
}

double yamabe_residual(const MetricField& m, const ScalarField& f, const Eigen::VectorXd& p) {
  return yamabe_residual(m, f.jet_at(p), p);
}

}  // namespace schrogeo
