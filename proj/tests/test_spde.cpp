#include <cmath>

#include <gtest/gtest.h>

#include "volterra/error.h"
#include "volterra/process.h"
#include "volterra/rng.h"
#include "volterra/spde.h"
#include "volterra/stochastic_integral.h"

namespace volterra {
namespace {

EquationSpec single_mode(double lambda, double phi = 1.0, double H = 0.75) {
  EquationSpec s;
  s.lambda = Eigen::VectorXd::Constant(1, lambda);
  s.Phi = Eigen::MatrixXd::Constant(1, 1, phi);
  s.noise.H = H;
  return s;
}

EquationSpec three_mode() {
  EquationSpec s;
  s.lambda.resize(3);
  s.lambda << 0.5, 1.0, 3.0;
  s.Phi.resize(3, 2);
  s.Phi << 1.0, 0.0, 0.5, 0.5, 0.0, 2.0;
  s.noise.families = {NoiseFamily::fbm, NoiseFamily::fbm};
  return s;
}

TEST(EquationSpec, ValidateCatchesShapes) {
  auto s = three_mode();
  EXPECT_NO_THROW(s.validate());
  s.noise.families.pop_back();
  EXPECT_THROW(s.validate(), PreconditionError);
  s = three_mode();
  s.lambda[1] = std::nan("");
  EXPECT_THROW(s.validate(), PreconditionError);
}

TEST(EquationSpec, ModeWeights) {
  const auto w = three_mode().mode_weights();
  ASSERT_EQ(w.size(), 3u);
  EXPECT_DOUBLE_EQ(w[0], 1.0);
  EXPECT_DOUBLE_EQ(w[1], 0.5);
  EXPECT_DOUBLE_EQ(w[2], 4.0);
}

TEST(NoiseFamily, RoundTripsThroughStrings) {
  for (auto f : {NoiseFamily::fbm, NoiseFamily::rosenblatt})
    EXPECT_EQ(noise_family_from_string(to_string(f)), f);
  EXPECT_THROW(noise_family_from_string("levy"), PreconditionError);
}

TEST(LimitCondition, SingleModeOracle) {
  // int_0^inf e^(-2 r / (1 + 2 alpha)) dr = (1 + 2 alpha) / 2 = H for lambda = 1
  const auto r = check_limit_condition(single_mode(1.0));
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.value, 0.75, 1e-9);
}

TEST(LimitCondition, FailsWithoutDecay) {
  EXPECT_FALSE(check_limit_condition(single_mode(0.0)).pass);
  EXPECT_FALSE(check_limit_condition(single_mode(-0.5)).pass);
  // an undamped mode without noise does not matter
  auto s = three_mode();
  s.lambda[0] = 0.0;
  s.Phi.row(0).setZero();
  EXPECT_TRUE(check_limit_condition(s).pass);
}

TEST(HypothesisH, FiniteForDiagonalEquations) {
  const auto r = check_H(three_mode(), 1.0);
  EXPECT_TRUE(r.pass);
  EXPECT_GT(r.value, 0.0);
}

TEST(CovarianceQt, FrozenSingleModeValue) {
  EXPECT_NEAR(covariance_qt(single_mode(1.0), 1.0).m(0, 0), 0.411656808378, 1e-9);
}

TEST(CovarianceQt, WienerLikeSmallTime) {
  // q_t ~ Var(B_t) = t^(2H) for t << 1 / lambda
  const double t = 1e-4;
  EXPECT_NEAR(covariance_qt(single_mode(1.0), t).m(0, 0) / std::pow(t, 1.5), 1.0, 1e-3);
}

TEST(CovarianceQt, GAtEqualTimesIsQ) {
  const auto s = three_mode();
  const auto q = covariance_qt(s, 1.3).m;
  const auto g = covariance_g(s, 1.3, 1.3).m;
  EXPECT_LT((q - g).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_LT((q - q.transpose()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(CovarianceG, TransposeSymmetry) {
  const auto s = three_mode();
  EXPECT_LT((covariance_g(s, 0.7, 1.9).m - covariance_g(s, 1.9, 0.7).m.transpose()).cwiseAbs().maxCoeff(),
            1e-9);
}

TEST(QInfinity, NumericMatchesClosedForm) {
  const auto s = three_mode();
  const auto a = covariance_q_infinity(s).m;
  const auto b = covariance_q_infinity_closed(s).m;
  EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-8 * b.trace());
}

TEST(QInfinity, SingleModeClosedForm) {
  // H Gamma(2H) 2 / 2 at lambda = 1
  EXPECT_NEAR(covariance_q_infinity_closed(single_mode(1.0)).m(0, 0), 0.75 * std::tgamma(1.5), 1e-14);
}

TEST(MeanSquareIncrement, ApproachesFbmScaling) {
  // E|Z_{s+h} - Z_s|^2 / h^(2H) -> 1 as h -> 0, with an O(h^(1/2)) correction here
  const auto s = single_mode(1.0);
  auto ratio = [&](double h) { return mean_square_increment(s, 1.0, 1.0 + h) / std::pow(h, 1.5); };
  EXPECT_NEAR(ratio(1e-2), 0.9291635812, 1e-8);
  double prev = 1.0;
  for (double h : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const double dev = std::abs(ratio(h) - 1.0);
    EXPECT_LT(dev, prev) << "h=" << h;
    prev = dev;
  }
  EXPECT_LT(prev, 3e-3);
}

TEST(SolveMild, RecursionEqualsDefiniteIntegral) {
  const double lam = 1.7, phi = 0.8, T = 1.0;
  const auto s = single_mode(lam, phi);
  const GridSpec g(0.0, T, 65);
  const auto X = solve_mild(s, g, 6, 4);
  const auto e = simulate_fbm(g, 0.75, 6, 4, s.noise.fbm_method, stream_id(Stream::noise, 0));
  const auto f = IntegrandFn::scalar([&](double u) { return phi * std::exp(-lam * (T - u)); });
  const auto I = definite_integral(f, 0.0, T, e);
  const auto XT = X.at(T);
  for (Eigen::Index p = 0; p < 6; ++p) EXPECT_NEAR(XT(p, 0), I(p, 0), 1e-9);
}

TEST(SolveMild, DeterministicStartDecays) {
  auto s = single_mode(2.0, 0.0);
  s.x0.x = Eigen::VectorXd::Constant(1, 3.0);
  const auto X = solve_mild(s, GridSpec(0.0, 1.0, 11), 2, 1);
  EXPECT_NEAR(X.at(1.0)(0, 0), 3.0 * std::exp(-2.0), 1e-14);
  EXPECT_EQ(X.at(0.0)(1, 0), 3.0);
}

TEST(SolveMild, GridMustStartAtZero) {
  EXPECT_THROW(solve_mild(single_mode(1.0), GridSpec(-1.0, 1.0, 11), 2, 1), PreconditionError);
}

TEST(SolveMild, StationaryStartHasLimitVariance) {
  auto s = single_mode(1.0);
  s.x0.kind = InitialKind::x_infinity;
  s.x0.T_trunc = 30.0;
  const auto X = solve_mild(s, GridSpec(0.0, 1.0, 21), 4000, 12);
  const double q = covariance_q_infinity_closed(s).m(0, 0);
  for (double t : {0.0, 1.0}) {
    const double v = X.at(t).col(0).squaredNorm() / 4000.0;
    EXPECT_NEAR(v, q, 4.5 * q * std::sqrt(2.0 / 4000.0) + 0.02 * q) << "t=" << t;
  }
}

TEST(XInfinity, TruncationErrorIsTiny) {
  const auto r = sample_x_infinity(single_mode(1.0), 40.0, 0.05, 10, 3);
  EXPECT_EQ(r.x.rows(), 10);
  EXPECT_LT(r.truncation_ms, 1e-12);
  EXPECT_LT(r.tail_bound, 1e-12);
}

TEST(TraceTrend, DetectsGrowthAndBoundedness) {
  const std::vector<double> ts{1, 2, 4, 8, 16, 32};
  const auto grow = trace_trend(single_mode(0.0), ts);
  EXPECT_FALSE(grow.bounded);
  EXPECT_NEAR(grow.exponent, 1.5, 0.05);
  EXPECT_TRUE(trace_trend(single_mode(1.0), ts).bounded);
}

}  // namespace
}  // namespace volterra
