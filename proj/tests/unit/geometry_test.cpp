#include <gtest/gtest.h>

#include <cmath>

#include "schrogeo/bargmann/flat.hpp"
#include "schrogeo/errors.hpp"
#include "schrogeo/geometry/tensor_calculus.hpp"
#include "schrogeo/homogeneous/metrics.hpp"
#include "schrogeo/numkernel/sampler.hpp"
#include "schrogeo/oracle/finite_difference.hpp"

namespace schrogeo {
namespace {

using homogeneous::SchrodingerManifoldConfig;

std::vector<Interval> bulk_box(int d) {
  std::vector<Interval> box(static_cast<std::size_t>(d + 2), Interval{-1.0, 1.0});
  box.push_back({0.5, 2.0});
  return box;
}

// A curved, non-symmetric test metric on a 3-chart.
MetricField warped_metric() {
  return MetricField::from(Chart({"u", "v", "w"}), {2, 1}, [](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    using std::exp;
    using std::sin;
    MatX<S> g = MatX<S>::Zero(3, 3);
    g(0, 0) = exp(S(0.3) * p[1]);
    g(1, 1) = S(1.0) + S(0.2) * sin(p[0] * p[2]);
    g(2, 2) = S(-1.0) - S(0.1) * p[0] * p[0];
    g(0, 2) = g(2, 0) = S(0.25) * p[1];
    return g;
  });
}

TEST(Chart, RejectsDegenerateDefinitions) {
  EXPECT_THROW(Chart({"x"}), ContractViolation);
  EXPECT_THROW(Chart({"x", "x"}), ContractViolation);
  EXPECT_EQ(Chart::bargmann(3).index_of("s"), 4);
  EXPECT_EQ(Chart::bulk(1).index_of("r"), 3);
}

TEST(Christoffel, FlatBargmannVanishes) {
  const MetricField g = bargmann::flat_metric(3);
  const Array3 gamma = christoffel(g, Eigen::VectorXd::LinSpaced(5, -1, 1));
  EXPECT_EQ(gamma.max_abs(), 0.0);
}

TEST(Christoffel, PoincareChartValues) {
  // d = 1, lambda = -1/2, r = 2 on the bulk chart (x, t, s, r).
  const MetricField g = homogeneous::poincare_metric(1, -0.5);
  const Eigen::Vector4d p(0.3, -0.2, 0.7, 2.0);
  const Array3 gamma = christoffel(g, p);
  EXPECT_NEAR(gamma(0, 0, 3), -0.5, 1e-15);
  EXPECT_NEAR(gamma(3, 3, 3), -0.5, 1e-15);
  const Array3 fd = oracle::fd_christoffel(g, p);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) EXPECT_NEAR(gamma(a, b, c), fd(a, b, c), 1e-9);
}

TEST(Christoffel, SymmetricInLowerIndicesAndMatchesOracle) {
  const MetricField g = homogeneous::schrodinger_metric({3, -0.5, 1.0});
  SeededSampler sampler(21, bulk_box(3));
  for (int k = 0; k < 10; ++k) {
    const Eigen::VectorXd p = sampler.sample();
    const Array3 gamma = christoffel(g, p);
    const Array3 fd = oracle::fd_christoffel(g, p);
    const double scale = std::max(1.0, gamma.max_abs());
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c) {
          EXPECT_EQ(gamma(a, b, c), gamma(a, c, b));
          EXPECT_LT(std::abs(gamma(a, b, c) - fd(a, b, c)), 1e-5 * scale);
        }
  }
}

TEST(Christoffel, DegenerateMetricThrows) {
  const MetricField g = homogeneous::poincare_metric(1, -0.5);
  EXPECT_THROW(christoffel(g, Eigen::Vector4d(0, 0, 0, 0)), DegenerateMetric);
  const MetricField zero = MetricField::from(Chart({"a", "b"}), {1, 1}, [](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    MatX<S> g = MatX<S>::Zero(2, 2);
    g(0, 0) = p[0];
    return g;
  });
  EXPECT_THROW(christoffel(zero, Eigen::Vector2d(1, 1)), DegenerateMetric);
}

TEST(Metricity, VanishesForEveryTestMetric) {
  const std::vector<MetricField> metrics = {
      bargmann::flat_metric(2), homogeneous::schrodinger_metric({1, -0.5, 1.0}),
      homogeneous::schrodinger_metric({2, -0.3, 1.7}), homogeneous::schrodinger_metric({3, -2.0, -1.0})};
  for (const MetricField& m : metrics) {
    std::vector<Interval> box(static_cast<std::size_t>(m.dim()), Interval{-1, 1});
    if (m.chart().names().back() == "r") box.back() = {0.5, 2.0};
    SeededSampler sampler(5, box);
    for (int k = 0; k < 20; ++k) {
      const Eigen::VectorXd p = sampler.sample();
      const double scale = std::max(1.0, m.gram(p).cwiseAbs().maxCoeff());
      EXPECT_LT(metricity(m, p).max_abs(), 1e-9 * scale);
    }
  }
  const MetricField w = warped_metric();
  EXPECT_LT(metricity(w, Eigen::Vector3d(0.2, 0.4, -0.3)).max_abs(), 1e-12);
}

TEST(Ricci, FlatBargmannVanishes) {
  const RicciResult r = ricci_scalar(bargmann::flat_metric(3), Eigen::VectorXd::Constant(5, 0.3));
  EXPECT_EQ(r.ricci.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(r.scalar, 0.0);
}

TEST(Ricci, PoincareMetricIsEinstein) {
  SeededSampler sampler(8, bulk_box(3));
  for (double lambda : {-0.5, -1.0}) {
    const MetricField g = homogeneous::poincare_metric(3, lambda);
    const double factor = 5.0 / (2.0 * lambda);  // (d+2)/(2 lambda)
    for (int k = 0; k < 5; ++k) {
      const Eigen::VectorXd p = sampler.sample();
      const RicciResult r = ricci_scalar(g, p);
      EXPECT_LT((r.ricci - factor * g.gram(p)).cwiseAbs().maxCoeff(), 1e-8);
      EXPECT_LT((r.ricci - r.ricci.transpose()).cwiseAbs().maxCoeff(), 1e-12);
      // R = n (d+2)/(2 lambda) with n = d + 3.
      EXPECT_NEAR(r.scalar, 6.0 * factor, 1e-9);
    }
  }
}

TEST(Ricci, AgreesWithFiniteDifferenceOracle) {
  const std::vector<MetricField> metrics = {homogeneous::schrodinger_metric({2, -0.3, 1.7}),
                                            warped_metric()};
  for (const MetricField& m : metrics) {
    std::vector<Interval> box(static_cast<std::size_t>(m.dim()), Interval{-1, 1});
    if (m.chart().names().back() == "r") box.back() = {0.8, 1.6};
    SeededSampler sampler(13, box);
    for (int k = 0; k < 10; ++k) {
      const Eigen::VectorXd p = sampler.sample();
      const Eigen::MatrixXd ric = ricci_scalar(m, p).ricci;
      const Eigen::MatrixXd fd = oracle::fd_ricci(m, p);
      const double scale = std::max(1.0, ric.cwiseAbs().maxCoeff());
      EXPECT_LT((ric - fd).cwiseAbs().maxCoeff(), 1e-5 * scale);
    }
  }
}

TEST(CovariantDerivative, ConstantFieldOnFlatMetric) {
  const Eigen::MatrixXd nabla = covariant_derivative(
      bargmann::flat_metric(2), bargmann::fundamental_field(2), Eigen::Vector4d(1, 2, 3, 4));
  EXPECT_EQ(nabla.cwiseAbs().maxCoeff(), 0.0);
}

TEST(CovariantDerivative, GenericOneFormMatchesOracle) {
  const MetricField g = homogeneous::poincare_metric(2, -0.7);
  const OneForm w = OneForm::from([](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    using std::sin;
    VecX<S> out(5);
    out << sin(p[0]) * p[4], p[1] * p[2], S(1.0), p[3] * p[3], p[0] - p[4];
    return out;
  });
  SeededSampler sampler(3, bulk_box(2));
  for (int k = 0; k < 5; ++k) {
    const Eigen::VectorXd p = sampler.sample();
    const Eigen::MatrixXd a = covariant_derivative(g, w, p);
    const Eigen::MatrixXd b = oracle::fd_covariant_derivative(g, w, p);
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-5);
  }
}

TEST(LieDerivative, RotationAndDilationOnFlatMetric) {
  const MetricField g = bargmann::flat_metric(3);
  const VectorField rotation = VectorField::from([](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    VecX<S> v = VecX<S>::Zero(5);
    v[0] = -p[1];
    v[1] = p[0];
    return v;
  });
  const double chi = 0.7;
  const VectorField dilation = VectorField::from([chi](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    VecX<S> v = VecX<S>::Zero(5);
    for (int i = 0; i < 3; ++i) v[i] = chi * p[i];
    v[3] = 2.0 * chi * p[3];
    return v;
  });
  const Eigen::VectorXd p = Eigen::VectorXd::LinSpaced(5, -0.4, 0.9);
  EXPECT_EQ(lie_derivative_metric(g, rotation, p).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_LT((lie_derivative_metric(g, dilation, p) - 2.0 * chi * g.gram(p)).cwiseAbs().maxCoeff(), 1e-15);
  const ConformalDeviation cd = conformal_deviation(g, dilation, p);
  EXPECT_NEAR(cd.phi, 2.0 * chi, 1e-15);
  EXPECT_LT(cd.residual, 1e-15);
}

TEST(LieDerivative, VerticalFieldIsKillingInTheBulk) {
  const MetricField g = homogeneous::schrodinger_metric({2, -0.5, 1.0});
  const Eigen::VectorXd p = Eigen::VectorXd::LinSpaced(5, 0.2, 1.3);
  EXPECT_EQ(lie_derivative_metric(g, homogeneous::xi_hat_field(2), p).cwiseAbs().maxCoeff(), 0.0);
}

TEST(ConformalDeviation, ExpansionHasPhiTwoAlphaT) {
  const double alpha = 0.3;
  const VectorField expansion = VectorField::from([alpha](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    VecX<S> v = VecX<S>::Zero(5);
    const S t = p[3];
    for (int i = 0; i < 3; ++i) v[i] = alpha * t * p[i];
    v[3] = alpha * t * t;
    v[4] = -0.5 * alpha * (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    return v;
  });
  const MetricField g = bargmann::flat_metric(3);
  Eigen::VectorXd p(5);
  p << 0.1, -0.4, 0.8, 0.7, -0.3;
  const ConformalDeviation cd = conformal_deviation(g, expansion, p);
  EXPECT_NEAR(cd.phi, 1.4 * alpha, 1e-15);
  EXPECT_LT(cd.residual, 1e-10);
  // phi depends on t only.
  Eigen::VectorXd q = p;
  q[0] = -0.9;
  q[4] = 0.6;
  EXPECT_NEAR(conformal_deviation(g, expansion, q).phi, cd.phi, 1e-15);
}

TEST(ConformalDeviation, ShearIsNotConformal) {
  const VectorField shear = VectorField::from([](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    VecX<S> v = VecX<S>::Zero(5);
    v[1] = p[0];
    return v;
  });
  const ConformalDeviation cd =
      conformal_deviation(bargmann::flat_metric(3), shear, Eigen::VectorXd::Constant(5, 0.2));
  EXPECT_GT(cd.residual, 0.1);
}

TEST(ExteriorWedge, ClockIsClosed) {
  const WedgeResult w = exterior_wedge(bargmann::clock_form(2), Eigen::Vector4d(1, 2, 3, 4));
  EXPECT_EQ(w.d_omega.cwiseAbs().maxCoeff(), 0.0);
}

TEST(ExteriorWedge, ThetaHatIsIntegrable) {
  // theta_hat = dt / r^2 is the bulk clock for lambda = -1/2.
  const homogeneous::SchrodingerManifoldConfig cfg{1, -0.5, 1.0};
  const Eigen::Vector4d p(0.3, 0.4, -0.2, 1.5);
  const WedgeResult w = exterior_wedge(homogeneous::theta_hat_form(cfg), p);
  const double r = p[3];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double expected = 0.0;
      if (a == 3 && b == 1) expected = -2.0 / (r * r * r);
      if (a == 1 && b == 3) expected = 2.0 / (r * r * r);
      EXPECT_NEAR(w.d_omega(a, b), expected, 1e-15);
    }
  EXPECT_LT(w.omega_wedge_d_omega.max_abs(), 1e-12);
}

TEST(ExteriorWedge, NonIntegrableFormDetected) {
  // x dy + dz on R^3 is a contact form.
  const OneForm contact = OneForm::from([](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    VecX<S> w(3);
    w << S(0.0), p[0], S(1.0);
    return w;
  });
  const WedgeResult w = exterior_wedge(contact, Eigen::Vector3d(0.5, 0.1, 0.2));
  EXPECT_NEAR(std::abs(w.omega_wedge_d_omega(0, 1, 2)), 1.0, 1e-15);
}

TEST(Yamabe, HarmonicCoordinateOnFlatMetric) {
  const ScalarField x1 = ScalarField::from([](const auto& p) { return p[0]; });
  EXPECT_EQ(yamabe_residual(bargmann::flat_metric(3), x1, Eigen::VectorXd::Constant(5, 0.1)), 0.0);
}

TEST(Yamabe, PlaneWaveSolvesFlatWaveEquation) {
  // k = (2, 0, 0): phase k.x - |k|^2 t / 2 + s
  auto phase = [](const auto& p) { return 2.0 * p[0] - 2.0 * p[3] + p[4]; };
  const ScalarField re = ScalarField::from([phase](const auto& p) {
    using std::cos;
    return cos(phase(p));
  });
  const ScalarField im = ScalarField::from([phase](const auto& p) {
    using std::sin;
    return sin(phase(p));
  });
  const MetricField g = bargmann::flat_metric(3);
  SeededSampler sampler(4, std::vector<Interval>(5, Interval{-1, 1}));
  for (int k = 0; k < 5; ++k) {
    const Eigen::VectorXd p = sampler.sample();
    EXPECT_LT(std::abs(yamabe_residual(g, re, p)), 1e-10);
    EXPECT_LT(std::abs(yamabe_residual(g, im, p)), 1e-10);
  }
}

// Under g' = Omega^2 g, the Yamabe operator satisfies
// Y'(Omega^{-(n-2)/2} f) = Omega^{-(n+2)/2} Y(f).
TEST(Yamabe, ConformalCovariance) {
  const int d = 2;
  const double n = d + 2;
  const MetricField g = bargmann::flat_metric(d);
  const ScalarField omega = ScalarField::from([](const auto& p) {
    using std::exp;
    return exp(p[2]);
  });
  const MetricField gp = g.rescaled(omega);
  auto f_generic = [](const auto& p) {
    using std::sin;
    return sin(p[0] * p[1]) + p[2] * p[3] * p[3] + p[0];
  };
  const ScalarField f = ScalarField::from(f_generic);
  const ScalarField f_weighted = ScalarField::from([f_generic, n](const auto& p) {
    using std::exp;
    return exp(-(n - 2.0) / 2.0 * p[2]) * f_generic(p);
  });
  SeededSampler sampler(17, std::vector<Interval>(4, Interval{-1, 1}));
  for (int k = 0; k < 5; ++k) {
    const Eigen::VectorXd p = sampler.sample();
    const double lhs = yamabe_residual(gp, f_weighted, p);
    const double rhs = std::pow(omega(p), -(n + 2.0) / 2.0) * yamabe_residual(g, f, p);
    EXPECT_NEAR(lhs, rhs, 1e-8);
    // Independent finite-difference evaluation of both sides (R' computed by jets).
    const double r_gp = ricci_scalar(gp, p).scalar;
    const double lhs_fd = oracle::fd_laplacian(gp, f_weighted, p) - (n - 2) / (4 * (n - 1)) * r_gp * f_weighted(p);
    const double rhs_fd = std::pow(omega(p), -(n + 2.0) / 2.0) * oracle::fd_laplacian(g, f, p);
    EXPECT_NEAR(lhs_fd, rhs_fd, 1e-5);
  }
}

TEST(Divergence, DilationOnFlatMetric) {
  const int d = 3;
  const VectorField dilation = VectorField::from([](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    VecX<S> v = VecX<S>::Zero(5);
    for (int i = 0; i < 3; ++i) v[i] = p[i];
    v[3] = 2.0 * p[3];
    return v;
  });
  EXPECT_DOUBLE_EQ(divergence(bargmann::flat_metric(d), dilation, Eigen::VectorXd::Constant(5, 0.4)), d + 2.0);
  EXPECT_EQ(divergence(bargmann::flat_metric(d), bargmann::fundamental_field(d), Eigen::VectorXd::Zero(5)), 0.0);
}

TEST(LieBracket, CoordinateFields) {
  // [d_x, x d_y] = d_y
  const VectorField a = VectorField::constant(Eigen::Vector2d(1, 0));
  const VectorField b = VectorField::from([](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    VecX<S> v(2);
    v << S(0.0), p[0];
    return v;
  });
  EXPECT_EQ(lie_bracket(a, b, Eigen::Vector2d(0.3, 0.2)), Eigen::Vector2d(0, 1));
}

}  // namespace
}  // namespace schrogeo
