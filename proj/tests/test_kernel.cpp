#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "volterra/error.h"
#include "volterra/kernel.h"

namespace volterra {
namespace {

double phi_closed(double H, double u, double v) {
  return H * (2.0 * H - 1.0) * std::pow(std::abs(u - v), 2.0 * H - 2.0);
}

double fbm_cov(double H, double s, double t) {
  return 0.5 * (std::pow(std::abs(s), 2 * H) + std::pow(std::abs(t), 2 * H) -
                std::pow(std::abs(t - s), 2 * H));
}

TEST(FbmKernel, RejectsHOutsideOpenInterval) {
  EXPECT_THROW(FbmKernel(0.5), PreconditionError);
  EXPECT_THROW(FbmKernel(1.0), PreconditionError);
  EXPECT_THROW(FbmKernel(0.3), PreconditionError);
  EXPECT_NO_THROW(FbmKernel(0.75));
}

TEST(FbmKernel, VanishesOnAndAboveDiagonal) {
  const FbmKernel k(0.7);
  EXPECT_EQ(k.eval(1.0, 1.0), 0.0);
  EXPECT_EQ(k.eval(0.5, 1.0), 0.0);
  EXPECT_GT(k.eval(1.0, 0.5), 0.0);
}

TEST(FbmKernel, DerivativeMatchesFiniteDifference) {
  const FbmKernel k(0.8);
  const double u = 1.3, r = 0.2, h = 1e-6;
  const double fd = (k.eval(u + h, r) - k.eval(u - h, r)) / (2 * h);
  EXPECT_NEAR(k.deriv(u, r), fd, 1e-6 * std::abs(fd));
  EXPECT_NEAR(k.deriv_lag(u, u - r), k.deriv(u, r), 1e-14);
}

class PhiQuadrature : public ::testing::TestWithParam<double> {};

TEST_P(PhiQuadrature, MatchesClosedForm) {
  const double H = GetParam();
  const FbmKernel k(H);
  std::mt19937_64 eng(11);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  for (int i = 0; i < 8; ++i) {
    const double u = U(eng), v = U(eng);
    if (std::abs(u - v) < 1e-3) continue;
    const double q = phi_quadrature(k, u, v);
    EXPECT_NEAR(q / phi_closed(H, u, v), 1.0, 1e-6) << "u=" << u << " v=" << v;
  }
}

INSTANTIATE_TEST_SUITE_P(Hurst, PhiQuadrature, ::testing::Values(0.55, 0.7, 0.75, 0.9));

TEST(Phi, IsSymmetricAndShiftInvariant) {
  const auto k = opaque_fbm_kernel(0.75);
  const double a = phi(*k, 0.2, 1.1), b = phi(*k, 1.1, 0.2), c = phi(*k, 5.2, 6.1);
  EXPECT_NEAR(a, b, 1e-9 * a);
  EXPECT_NEAR(a, c, 1e-6 * a);
}

TEST(Phi, GapFormAvoidsCancellation) {
  const FbmKernel k(0.75);
  EXPECT_NEAR(phi_gap(k, 1e6, 1e-3) / phi_closed(0.75, 0.0, 1e-3), 1.0, 1e-12);
}

TEST(CovR, ThreeRoutesAgree) {
  const FbmKernel k(0.7);
  const auto opaque = opaque_fbm_kernel(0.7);
  const double closed = cov_R(k, 0.0, 1.0, 0.5, 2.0);
  const double expect = fbm_cov(0.7, 1.0, 2.0) - fbm_cov(0.7, 1.0, 0.5);
  EXPECT_NEAR(closed, expect, 1e-12);
  EXPECT_NEAR(cov_R_phi(k, 0.0, 1.0, 0.5, 2.0), expect, 1e-6);
  EXPECT_NEAR(cov_R_direct(*opaque, 0.0, 1.0, 0.5, 2.0), expect, 1e-6);
}

TEST(CovR, UnitNormalization) {
  for (double H : {0.55, 0.7, 0.9}) {
    const FbmKernel k(H);
    EXPECT_NEAR(cov_R_direct(k, 0.0, 1.0, 0.0, 1.0), 1.0, 1e-6) << "H=" << H;
  }
}

TEST(CovR, OrientedSignFlip) {
  const FbmKernel k(0.75);
  EXPECT_DOUBLE_EQ(cov_R(k, 1.0, 0.0, 0.0, 2.0), -cov_R(k, 0.0, 1.0, 0.0, 2.0));
}

TEST(KernelIncrement, FarBelowIntervalStaysAccurate) {
  const FbmKernel k(0.75);
  const double r = -1e7;
  const double inc = kernel_increment(k, 0.0, 1.0, r);
  const double approx = k.C_H() * (0.25) * std::pow(-r, -0.75);  // derivative times width
  EXPECT_NEAR(inc / approx, 1.0, 1e-6);
}

TEST(Regularity, FbmMeetsItsConstant) {
  const FbmKernel k(0.65);
  std::vector<GridPoint> g;
  for (double u : {0.1, 1.0, 3.0})
    for (double lag : {1e-6, 1e-3, 0.5, 10.0}) g.push_back({u, u - lag});
  const auto rep = check_regularity(k, g);
  EXPECT_TRUE(rep.pass) << rep.max_ratio << " vs " << rep.bound;
}

TEST(Regularity, TightConstantFails) {
  const FbmKernel k(0.65, 0.5 * FbmKernel(0.65).c_H());
  const auto rep = check_regularity(k, {{1.0, 0.5}});
  EXPECT_FALSE(rep.pass);
}

TEST(IncrementBound, DominatesExactVariance) {
  // E(b_t - b_s)^2 = |t - s|^(2H) = |t - s|^(1 + 2 alpha), so C >= 1 (equality for fBm)
  for (double H : {0.55, 0.75, 0.95}) EXPECT_GE(increment_bound_const(FbmKernel(H)), 1.0 - 1e-12) << H;
}

}  // namespace
}  // namespace volterra
