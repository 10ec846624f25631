#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "brute_force.hpp"
#include "schrogeo/bargmann/flat.hpp"
#include "schrogeo/homogeneous/metrics.hpp"
#include "schrogeo/numkernel/jet2.hpp"
#include "schrogeo/numkernel/linalg.hpp"
#include "schrogeo/numkernel/sampler.hpp"
#include "schrogeo/oracle/finite_difference.hpp"

namespace schrogeo {
namespace {

TEST(Jet2, SquareAtThree) {
  const Jet2 x = Jet2::variable(3.0, 0, 1);
  const Jet2 f = x * x;
  EXPECT_DOUBLE_EQ(f.value(), 9.0);
  EXPECT_DOUBLE_EQ(f.grad()[0], 6.0);
  EXPECT_DOUBLE_EQ(f.hess()(0, 0), 2.0);
}

TEST(Jet2, ReciprocalAtTwo) {
  const Jet2 x = Jet2::variable(2.0, 0, 1);
  const Jet2 f = 1.0 / x;
  EXPECT_DOUBLE_EQ(f.value(), 0.5);
  EXPECT_DOUBLE_EQ(f.grad()[0], -0.25);
  EXPECT_DOUBLE_EQ(f.hess()(0, 0), 0.25);
}

TEST(Jet2, DivisionByZeroValueIsSingular) {
  const Jet2 x = Jet2::variable(0.0, 0, 2);
  EXPECT_THROW(Jet2(1.0) / x, JetSingularity);
  EXPECT_THROW(x.reciprocal(), JetSingularity);
}

TEST(Jet2, HessianSymmetrizedOnConstruction) {
  Eigen::MatrixXd h(2, 2);
  h << 1.0, 2.0, 0.0, 3.0;
  const Jet2 j(0.0, Eigen::VectorXd::Zero(2), h);
  EXPECT_EQ(j.hess()(0, 1), j.hess()(1, 0));
  EXPECT_DOUBLE_EQ(j.hess()(0, 1), 1.0);
}

TEST(Jet2, MismatchedDimensionsRejected) {
  EXPECT_THROW(Jet2::variable(1.0, 0, 2) + Jet2::variable(1.0, 0, 3), ContractViolation);
}

TEST(Jet2, BilinearHessianMatchesFiniteDifferences) {
  SeededSampler sampler(7, {{-2, 2}, {-2, 2}});
  for (int k = 0; k < 10; ++k) {
    const Eigen::VectorXd p = sampler.sample();
    const VecX<Jet2> v = seed_jets(p);
    const Jet2 f = v[0] * v[1];
    EXPECT_EQ(f.hess()(0, 1), 1.0);
    EXPECT_EQ(f.hess()(1, 0), 1.0);
    EXPECT_EQ(f.hess()(0, 0), 0.0);
    EXPECT_EQ(f.hess()(1, 1), 0.0);

    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad =
        [](const Eigen::VectorXd& q) { return Eigen::Vector2d(q[1], q[0]).eval(); };
    const Eigen::MatrixXd fd_hess = oracle::fd_jacobian(grad, p);
    EXPECT_LT((fd_hess - f.hess()).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Jet2, TranscendentalChainRuleMatchesFiniteDifferences) {
  const Eigen::Vector3d p(0.3, -0.7, 1.1);
  auto expr = [](const auto& x) {
    using std::cos;
    using std::exp;
    using std::sin;
    using std::sqrt;
    return exp(x[0] * x[1]) * sin(x[2]) + sqrt(x[2] * x[2] + 1.0) / cos(x[0]);
  };
  const Jet2 f = expr(seed_jets(p));
  const std::function<Eigen::VectorXd(const Eigen::VectorXd&)> fv = [&](const Eigen::VectorXd& q) {
    return Eigen::VectorXd::Constant(1, expr(q));
  };
  const std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad = [&](const Eigen::VectorXd& q) {
    return Eigen::VectorXd(oracle::fd_jacobian(fv, q).col(0));
  };
  EXPECT_NEAR(f.value(), expr(Eigen::VectorXd(p)), 1e-15);
  EXPECT_LT((oracle::fd_jacobian(fv, p).col(0) - f.grad()).cwiseAbs().maxCoeff(), 1e-9);
  // Nested differences lose about half the digits.
  EXPECT_LT((oracle::fd_jacobian(grad, p) - f.hess()).cwiseAbs().maxCoeff(), 1e-4);
}

// Product rule holds componentwise for random jets.
TEST(Jet2, ProductRuleProperty) {
  SeededSampler sampler(11, {});
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 4;
    Eigen::MatrixXd ha = sampler.uniform_vector(n * n, -1, 1).reshaped(n, n);
    Eigen::MatrixXd hb = sampler.uniform_vector(n * n, -1, 1).reshaped(n, n);
    const Jet2 a(sampler.uniform(-3, 3), sampler.uniform_vector(n, -1, 1), ha);
    const Jet2 b(sampler.uniform(-3, 3), sampler.uniform_vector(n, -1, 1), hb);
    const Jet2 ab = a * b;
    const Eigen::VectorXd expected = a.value() * b.grad() + b.value() * a.grad();
    for (Eigen::Index i = 0; i < n; ++i) {
      EXPECT_LE(std::abs(ab.grad()[i] - expected[i]), 1e-15 * std::max(1.0, std::abs(expected[i])));
    }
    EXPECT_EQ(ab.hess(), ab.hess().transpose());
  }
}

TEST(Jet2, ConstantsCombineWithVariables) {
  const Jet2 x = Jet2::variable(2.0, 1, 3);
  const Jet2 f = 3.0 * x + 1.0 - Jet2(2.0) * x;
  EXPECT_DOUBLE_EQ(f.value(), 3.0);
  EXPECT_EQ(f.grad(), Eigen::Vector3d(0, 1, 0));
}

TEST(RankNullspace, IdentityHasFullRank) {
  const RankNullspace rn = rank_nullspace(Eigen::MatrixXd::Identity(4, 4));
  EXPECT_EQ(rn.rank, 4);
  EXPECT_EQ(rn.nullspace.cols(), 0);
}

TEST(RankNullspace, ZeroMatrixHasFullNullspace) {
  const RankNullspace rn = rank_nullspace(Eigen::MatrixXd::Zero(3, 5));
  EXPECT_EQ(rn.rank, 0);
  EXPECT_EQ(rn.nullspace.cols(), 5);
}

TEST(RankNullspace, RejectsNonPositiveTolerance) {
  EXPECT_THROW(rank_nullspace(Eigen::MatrixXd::Identity(2, 2), 0.0), ContractViolation);
}

TEST(RankNullspace, NullspaceIsOrthonormalAndAnnihilated) {
  SeededSampler sampler(3, {});
  // Rank-3 8x6 matrix.
  const Eigen::MatrixXd a = sampler.uniform_vector(24, -1, 1).reshaped(8, 3);
  const Eigen::MatrixXd b = sampler.uniform_vector(18, -1, 1).reshaped(3, 6);
  const Eigen::MatrixXd m = a * b;
  const RankNullspace rn = rank_nullspace(m);
  EXPECT_EQ(rn.rank, 3);
  EXPECT_EQ(rn.rank, testing::gauss_rank(m));
  ASSERT_EQ(rn.nullspace.cols(), 3);
  EXPECT_LT((rn.nullspace.transpose() * rn.nullspace - Eigen::MatrixXd::Identity(3, 3)).norm(), 1e-12);
  const double smax = rn.singular_values[0];
  for (Eigen::Index k = 0; k < rn.nullspace.cols(); ++k) {
    EXPECT_LE((m * rn.nullspace.col(k)).norm(), 10 * kDefaultRankTol * smax);
  }
  // Idempotence: projecting onto the complement of the nullspace keeps the rank.
  const Eigen::MatrixXd proj =
      Eigen::MatrixXd::Identity(6, 6) - rn.nullspace * rn.nullspace.transpose();
  EXPECT_EQ(rank_nullspace(m * proj).rank, rn.rank);
  EXPECT_EQ(rank_nullspace(m, 1e-9).rank, 3);
  EXPECT_EQ(rank_nullspace(m, 1e-11).rank, 3);
}

TEST(SymEigen, DiagonalSpectrumAscending) {
  const Eigen::VectorXd ev = sym_eigen(Eigen::Vector3d(1, 1, -1).asDiagonal());
  EXPECT_EQ(ev, Eigen::Vector3d(-1, 1, 1));
}

TEST(SymEigen, FlatBargmannGramD1) {
  const Eigen::VectorXd ev = sym_eigen(bargmann::flat_gram(1));
  EXPECT_NEAR(ev[0], -1.0, 1e-14);
  EXPECT_NEAR(ev[1], 1.0, 1e-14);
  EXPECT_NEAR(ev[2], 1.0, 1e-14);
}

TEST(SymEigen, AsymmetricInputIsAContractViolation) {
  Eigen::Matrix2d m;
  m << 1, 2, 0, 1;
  EXPECT_THROW(sym_eigen(m), ContractViolation);
}

TEST(SymEigen, EigenpairResiduals) {
  SeededSampler sampler(5, {});
  const Eigen::MatrixXd a = sampler.uniform_vector(25, -1, 1).reshaped(5, 5);
  const Eigen::MatrixXd m = a + a.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const Eigen::VectorXd ev = sym_eigen(m);
  for (Eigen::Index i = 0; i < 5; ++i) {
    EXPECT_DOUBLE_EQ(ev[i], es.eigenvalues()[i]);
    EXPECT_LT((m * es.eigenvectors().col(i) - ev[i] * es.eigenvectors().col(i)).norm(), 1e-10 * m.norm());
  }
}

// Lorentzian signature of the bulk metric, cross-checked by counting sign
// changes of the characteristic polynomial.
TEST(SymEigen, SchrodingerGramIsLorentzian) {
  const homogeneous::SchrodingerManifoldConfig cfg{3, -0.5, 1.0};
  SeededSampler sampler(42, {{-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {0.5, 2.0}});
  for (int k = 0; k < 5; ++k) {
    const Eigen::VectorXd p = sampler.sample();
    const Eigen::MatrixXd g = homogeneous::schrodinger_gram<double>(p, cfg.d, cfg.lambda, cfg.mu);
    EXPECT_EQ(negative_index(g), 1);
    EXPECT_EQ(testing::negative_roots(testing::charpoly(g)), 1);
  }
}

TEST(Expm, DiagonalAndInverse) {
  const Eigen::MatrixXd d = Eigen::Vector3d(0.5, -2.0, 3.0).asDiagonal();
  const Eigen::MatrixXd e = expm(d);
  EXPECT_NEAR(e(0, 0), std::exp(0.5), 1e-13 * std::exp(0.5));
  EXPECT_NEAR(e(1, 1), std::exp(-2.0), 1e-13);
  EXPECT_NEAR(e(2, 2), std::exp(3.0), 1e-13 * std::exp(3.0));

  SeededSampler sampler(9, {});
  const Eigen::MatrixXd a = sampler.uniform_vector(16, -1, 1).reshaped(4, 4);
  EXPECT_LT((expm(a) * expm(-a) - Eigen::MatrixXd::Identity(4, 4)).norm(), 1e-13);
}

TEST(Expm, NilpotentSeriesIsExact) {
  Eigen::Matrix3d n = Eigen::Matrix3d::Zero();
  n(0, 1) = 2.0;
  n(1, 2) = 3.0;
  const Eigen::MatrixXd e = expm(n);
  EXPECT_EQ(e(0, 1), 2.0);
  EXPECT_EQ(e(1, 2), 3.0);
  EXPECT_EQ(e(0, 2), 3.0);
  EXPECT_EQ(e(0, 0), 1.0);
}

TEST(SeededSampler, EqualSeedsGiveBitwiseEqualStreams) {
  SeededSampler a(42, {{-1, 1}, {0, 5}});
  SeededSampler b(42, {{-1, 1}, {0, 5}});
  for (int i = 0; i < 100; ++i) {
    const Eigen::VectorXd pa = a.sample(), pb = b.sample();
    EXPECT_EQ(std::memcmp(pa.data(), pb.data(), sizeof(double) * 2), 0);
  }
  SeededSampler c(43, {{-1, 1}, {0, 5}});
  EXPECT_NE(SeededSampler(42, {{-1, 1}}).sample()[0], c.sample()[0]);
}

TEST(SeededSampler, RejectsExcludedLocus) {
  SeededSampler s(1, {{-1, 1}}, [](const Eigen::VectorXd& p) { return std::abs(p[0]) <= 0.5; });
  for (int i = 0; i < 200; ++i) EXPECT_GT(std::abs(s.sample()[0]), 0.5);
  EXPECT_GT(s.rejected(), 0u);
  EXPECT_EQ(s.accepted(), 200u);
}

}  // namespace
}  // namespace schrogeo
