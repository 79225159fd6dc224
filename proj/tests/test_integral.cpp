#include <cmath>

#include <gtest/gtest.h>

#include "volterra/error.h"
#include "volterra/kernel.h"
#include "volterra/process.h"
#include "volterra/stochastic_integral.h"

namespace volterra {
namespace {

TEST(StepFunction, EvaluatesPiecewise) {
  const StepFunction f({0.0, 1.0, 2.0}, std::vector<double>{3.0, -1.0});
  EXPECT_EQ(f(0.5)[0], 3.0);
  EXPECT_EQ(f(1.0)[0], -1.0);
  EXPECT_EQ(f(2.5)[0], 0.0);
  EXPECT_EQ(f(-0.1)[0], 0.0);
}

TEST(StepFunction, RejectsBadBreakpoints) {
  EXPECT_THROW(StepFunction({1.0, 0.0}, std::vector<double>{1.0}), PreconditionError);
  EXPECT_THROW(StepFunction({0.0, 1.0}, std::vector<double>{1.0, 2.0}), PreconditionError);
}

TEST(StepFunction, CombineIsLinear) {
  const StepFunction f({0.0, 1.0}, std::vector<double>{2.0});
  const StepFunction g({0.5, 1.5}, std::vector<double>{4.0});
  const auto h = StepFunction::combine(1.0, f, -0.5, g);
  EXPECT_DOUBLE_EQ(h(0.25)[0], 2.0);
  EXPECT_DOUBLE_EQ(h(0.75)[0], 0.0);
  EXPECT_DOUBLE_EQ(h(1.25)[0], -2.0);
}

TEST(DNorm, IndicatorHasIncrementVariance) {
  const FbmKernel k(0.75);
  const StepFunction f({0.3, 1.3}, std::vector<double>{1.0});
  const auto d = d_norm(k, f);
  EXPECT_NEAR(d.value, 1.0, 1e-6);
  EXPECT_NEAR(d.via_kstar, 1.0, 1e-3);
}

TEST(DNorm, TwoRoutesAgreeOnVectorSteps) {
  const FbmKernel k(0.65);
  Eigen::VectorXd a(2), b(2), c(2);
  a << 1.0, -2.0;
  b << 0.5, 0.0;
  c << -1.0, 3.0;
  const StepFunction f({-1.0, -0.2, 0.4, 1.5}, {a, b, c});
  const auto d = d_norm(k, f);
  EXPECT_LT(d.rel_discrepancy, 1e-3);
  EXPECT_NEAR(d.value, inner_product(k, f, f), 1e-8 * d.value);
}

TEST(InnerProduct, Bilinear) {
  const FbmKernel k(0.8);
  const StepFunction f({0.0, 1.0}, std::vector<double>{1.0});
  const StepFunction g({0.5, 2.0}, std::vector<double>{1.0});
  const double fg = inner_product(k, f, g);
  EXPECT_NEAR(inner_product(k, f.scaled(3.0), g), 3.0 * fg, 1e-12);
  EXPECT_NEAR(inner_product(k, g, f), fg, 1e-12);
  const auto s = StepFunction::combine(1.0, f, 1.0, g);
  EXPECT_NEAR(d_norm_sq(k, s), d_norm_sq(k, f) + 2 * fg + d_norm_sq(k, g), 1e-9);
}

TEST(IntegrateStep, SumsWeightedIncrements) {
  const auto e = simulate_fbm(GridSpec(0.0, 2.0, 21), 0.7, 5, 2);
  const StepFunction f({0.0, 1.0, 2.0}, std::vector<double>{2.0, -1.0});
  const auto I = integrate_step(f, e);
  ASSERT_EQ(I.rows(), 5);
  for (Eigen::Index p = 0; p < 5; ++p) {
    const double expect = 2.0 * (e.values(10, p) - e.values(0, p)) - (e.values(20, p) - e.values(10, p));
    EXPECT_NEAR(I(p, 0), expect, 1e-12);
  }
}

TEST(IntegrateStep, OffGridBreakpointThrows) {
  const auto e = simulate_fbm(GridSpec(0.0, 1.0, 11), 0.7, 2, 2);
  EXPECT_THROW(integrate_step(StepFunction({0.0, 1.2}, std::vector<double>{1.0}), e),
               AlignmentError);
}

TEST(DefiniteIntegral, ConstantIntegrandIsIncrement) {
  const auto e = simulate_fbm(GridSpec(-1.0, 1.0, 41), 0.75, 4, 8);
  const auto I = definite_integral(IntegrandFn::scalar([](double) { return 1.0; }), -0.5, 1.0, e);
  EXPECT_TRUE(I.col(0).isApprox(e.increment(-0.5, 1.0), 1e-12));
}

TEST(DefiniteIntegral, NonFiniteIntegrandThrows) {
  const auto e = simulate_fbm(GridSpec(0.0, 1.0, 11), 0.75, 2, 8);
  const auto f = IntegrandFn::scalar([](double r) { return r < 0.5 ? 1.0 : std::nan(""); });
  EXPECT_THROW(definite_integral(f, 0.0, 1.0, e), IntegrandError);
}

TEST(IntegrandFn, LqNormOfConstant) {
  const auto f = IntegrandFn::scalar([](double) { return 2.0; });
  const double alpha = 0.25, q = 2.0 / (1.0 + 2.0 * alpha);
  EXPECT_NEAR(f.lq_norm(0.0, 3.0, alpha), 2.0 * std::pow(3.0, 1.0 / q), 1e-9);
}

TEST(Isometry, MonteCarloMatchesDNorm) {
  const double H = 0.7;
  const FbmKernel k(H);
  const auto e = simulate_fbm(GridSpec(-2.0, 2.0, 81), H, 20000, 17, FbmMethod::circulant);
  const StepFunction f({-1.5, 0.0, 0.5, 2.0}, std::vector<double>{1.0, -2.0, 0.7});
  const auto I = integrate_step(f, e);
  const double v = I.col(0).squaredNorm() / static_cast<double>(I.rows());
  const double d = d_norm(k, f).value;
  EXPECT_NEAR(v, d, 4.5 * d * std::sqrt(2.0 / I.rows()));
}

}  // namespace
}  // namespace volterra
