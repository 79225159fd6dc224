#include <cmath>

#include <gtest/gtest.h>

#include "volterra/diagnostics.h"
#include "volterra/error.h"
#include "volterra/process.h"
#include "volterra/rng.h"
#include "volterra/stochastic_integral.h"

namespace volterra {
namespace {

Samples gaussian(std::size_t n, int dim, std::uint64_t seed, double shift = 0.0, double scale = 1.0) {
  auto eng = make_engine(seed, 99, 0);
  Samples X(static_cast<Eigen::Index>(n), dim);
  fill_normal(eng, X.data(), static_cast<std::size_t>(X.size()));
  return (scale * X.array() + shift).matrix();
}

TEST(Energy, SameLawPasses) {
  const auto r = energy_two_sample(gaussian(300, 2, 1), gaussian(300, 2, 2));
  EXPECT_TRUE(r.pass) << summary(r);
  EXPECT_GT(r.p_value, 0.01);
}

TEST(Energy, ShiftedLawFails) {
  const auto r = energy_two_sample(gaussian(300, 2, 1), gaussian(300, 2, 2, 0.5));
  EXPECT_FALSE(r.pass);
  EXPECT_LE(r.p_value, 0.01);
}

TEST(Energy, ScaledLawFails) {
  EXPECT_FALSE(energy_two_sample(gaussian(400, 1, 1), gaussian(400, 1, 2, 0.0, 1.6)).pass);
}

TEST(Energy, SymmetricInArguments) {
  const auto A = gaussian(120, 2, 5), B = gaussian(150, 2, 6, 0.1);
  const auto ab = energy_two_sample(A, B), ba = energy_two_sample(B, A);
  EXPECT_DOUBLE_EQ(ab.statistic, ba.statistic);
  EXPECT_DOUBLE_EQ(ab.p_value, ba.p_value);
}

TEST(Energy, RejectsTinyOrMismatchedSamples) {
  EXPECT_THROW(energy_two_sample(gaussian(20, 1, 1), gaussian(100, 1, 2)), PreconditionError);
  EXPECT_THROW(energy_two_sample(gaussian(100, 1, 1), gaussian(100, 2, 2)), PreconditionError);
}

TEST(ProjectedKs, DetectsShiftAlongDirection) {
  Eigen::VectorXd e1(2);
  e1 << 1.0, 0.0;
  EXPECT_TRUE(projected_ks(gaussian(500, 2, 1), gaussian(500, 2, 2), e1).pass);
  EXPECT_FALSE(projected_ks(gaussian(500, 2, 1), gaussian(500, 2, 2, 0.4), e1).pass);
}

TEST(Kolmogorov, TailValues) {
  EXPECT_NEAR(kolmogorov_tail(1.36), 0.0494, 5e-4);
  EXPECT_NEAR(kolmogorov_tail(0.0), 1.0, 1e-12);
}

TEST(Bonferroni, RejudgesAtFamilyLevel) {
  TwoSampleReport a, b;
  a.p_value = 0.006;
  b.p_value = 0.5;
  auto r = bonferroni({a, b}, 0.01);
  EXPECT_TRUE(r.pass);  // 0.006 > 0.01 / 2
  a.p_value = 0.004;
  r = bonferroni({a, b}, 0.01);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.tests.size(), 2u);
}

TEST(CharFunctional, StandardNormal) {
  Eigen::VectorXd h(1);
  h << 1.0;
  const auto c = char_functional(gaussian(50000, 1, 3), h);
  EXPECT_NEAR(c.value.real(), std::exp(-0.5), 4.5 * c.stderr_re);
  EXPECT_NEAR(c.value.imag(), 0.0, 4.5 * c.stderr_im);
  EXPECT_THROW(char_functional(gaussian(10, 1, 3), Eigen::VectorXd::Zero(1)), PreconditionError);
}

TEST(PrincipalDirections, AreOrthonormal) {
  const auto P = principal_directions(gaussian(200, 3, 1), gaussian(200, 3, 2));
  EXPECT_TRUE((P.transpose() * P).isApprox(Eigen::MatrixXd::Identity(3, 3), 1e-12));
}

TEST(IncrementLaws, FbmIsStationaryAndReflexive) {
  const auto e = simulate_fbm(GridSpec(-2.0, 2.0, 41), 0.7, 1200, 4, FbmMethod::circulant);
  const std::vector<std::pair<double, double>> iv{{0.0, 0.5}, {0.2, 1.0}};
  EXPECT_TRUE(check_increment_stationarity(e, iv, {0.5, 1.0}).pass);
  EXPECT_TRUE(check_increment_reflexivity(e, iv).pass);
}

TEST(IncrementLaws, SharedPairingAtZeroShiftIsExact) {
  const auto e = simulate_fbm(GridSpec(0.0, 2.0, 21), 0.7, 200, 4);
  const auto r = check_increment_stationarity(e, {{0.0, 0.5}}, {0.0}, {}, Pairing::shared);
  EXPECT_NEAR(r.tests.front().statistic, 0.0, 1e-12);
}

TEST(IncrementLaws, DriftedProcessFailsStationarity) {
  auto e = simulate_fbm(GridSpec(0.0, 2.0, 21), 0.7, 1200, 4);
  for (Eigen::Index i = 0; i < e.values.rows(); ++i) {
    const double t = e.grid.time(static_cast<std::size_t>(i));
    e.values.row(i).array() += 2.0 * t * t;
  }
  EXPECT_FALSE(check_increment_stationarity(e, {{0.0, 0.5}}, {1.0}).pass);
}

}  // namespace
}  // namespace volterra
