#include <cmath>

#include <gtest/gtest.h>

#include "volterra/error.h"
#include "volterra/grid.h"
#include "volterra/process.h"

namespace volterra {
namespace {

double fbm_cov(double H, double s, double t) {
  return 0.5 * (std::pow(std::abs(s), 2 * H) + std::pow(std::abs(t), 2 * H) -
                std::pow(std::abs(t - s), 2 * H));
}

TEST(Grid, ZeroLandsExactly) {
  const GridSpec g(-1.0, 2.0, 31);
  ASSERT_TRUE(g.zero_index().has_value());
  EXPECT_EQ(g.time(*g.zero_index()), 0.0);
  EXPECT_THROW(GridSpec(-1.0, 2.0, 30), PreconditionError);
}

TEST(Grid, SnapAndLocate) {
  const GridSpec g(0.0, 1.0, 11);
  EXPECT_EQ(g.snap(0.3), 3u);
  EXPECT_EQ(g.snap(0.34), 3u);
  EXPECT_EQ(g.snap(1.04), 10u);
  EXPECT_THROW(g.snap(1.06), AlignmentError);
  EXPECT_THROW(g.snap(-0.2), AlignmentError);
  EXPECT_FALSE(g.locate(0.35, 1e-6).has_value());
}

TEST(Fbm, PathsVanishAtZero) {
  for (auto m : {FbmMethod::cholesky, FbmMethod::circulant}) {
    const auto e = simulate_fbm(GridSpec(-1.0, 1.0, 21), 0.7, 30, 5, m);
    EXPECT_EQ(e.values.row(10).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(Fbm, SameSeedSameBytes) {
  const GridSpec g(0.0, 2.0, 65);
  const auto a = simulate_fbm(g, 0.75, 40, 9, FbmMethod::circulant);
  const auto b = simulate_fbm(g, 0.75, 40, 9, FbmMethod::circulant);
  EXPECT_TRUE(a.values == b.values);
  const auto c = simulate_fbm(g, 0.75, 40, 10, FbmMethod::circulant);
  EXPECT_FALSE(a.values == c.values);
}

TEST(Fbm, BlocksReassembleTheEnsemble) {
  const GridSpec g(-1.0, 1.0, 41);
  for (auto m : {FbmMethod::cholesky, FbmMethod::circulant}) {
    const auto full = simulate_fbm(g, 0.6, 20, 3, m);
    const auto tail = simulate_fbm(g, 0.6, 8, 3, m, 1, 12);
    EXPECT_TRUE(full.values.rightCols(8) == tail.values);
  }
}

class FbmCovariance : public ::testing::TestWithParam<FbmMethod> {};

TEST_P(FbmCovariance, EmpiricalMatchesExact) {
  const GridSpec g(-1.0, 1.0, 9);
  const double H = 0.8;
  const std::size_t n = 20000;
  const auto e = simulate_fbm(g, H, n, 21, GetParam());
  for (std::size_t i : {0u, 3u, 6u, 8u})
    for (std::size_t j : {2u, 7u, 8u}) {
      const double s = g.time(i), t = g.time(j);
      const double emp = e.values.row(static_cast<Eigen::Index>(i)).dot(e.values.row(static_cast<Eigen::Index>(j))) / n;
      const double exact = fbm_cov(H, s, t);
      const double sd = std::sqrt((fbm_cov(H, s, s) * fbm_cov(H, t, t) + exact * exact) / n);
      EXPECT_NEAR(emp, exact, 4.5 * sd + 1e-12) << "s=" << s << " t=" << t;
    }
}

INSTANTIATE_TEST_SUITE_P(Methods, FbmCovariance,
                         ::testing::Values(FbmMethod::cholesky, FbmMethod::circulant));

TEST(Fbm, IncrementAndSubEnsemble) {
  const auto e = simulate_fbm(GridSpec(0.0, 1.0, 11), 0.7, 6, 1);
  const auto inc = e.increment(0.2, 0.5);
  EXPECT_TRUE(inc.isApprox((e.values.row(5) - e.values.row(2)).transpose()));
  EXPECT_EQ(e.paths(2, 3).n_paths(), 3u);
  EXPECT_THROW(e.paths(5, 3), PreconditionError);
}

TEST(Rosenblatt, SchemeVarianceBiasShrinks) {
  const auto s = RosenblattScheme::make(0.75, 512);
  const double b64 = std::abs(s.unit_variance_bias(1.0 / 64));
  const double b512 = std::abs(s.unit_variance_bias(1.0 / 512));
  EXPECT_LT(b512, b64);
  EXPECT_LT(b512, 0.01);
}

TEST(Rosenblatt, CoarseSchemeIsRefused) {
  const auto s = RosenblattScheme::make(0.75, 4, 1e-4);
  EXPECT_THROW(simulate_rosenblatt(GridSpec(0.0, 1.0, 5), s, 10, 1), ConfigurationError);
}

TEST(Rosenblatt, ExactCumulantsOfUnitInterval) {
  const double H = 0.75;
  EXPECT_NEAR(rosenblatt_cumulant({{{0.0, 1.0}}, {1.0}, 2}, H), 1.0, 1e-6);
  // kappa_3 of R_1 by two independent routes: cyclic quadrature and the scheme trace
  const auto s = RosenblattScheme::make(H, 256);
  const double k3_quad = rosenblatt_cumulant({{{0.0, 1.0}}, {1.0}, 3}, H);
  const double k3_scheme = rosenblatt_scheme_cumulant(s, 1.0 / 256, 256, 3);
  EXPECT_GT(k3_quad, 0.0);
  EXPECT_NEAR(k3_scheme / k3_quad, 1.0, 0.03);
}

TEST(Rosenblatt, CovarianceMatchesFbmForm) {
  const double H = 0.7;
  for (double t : {0.5, 2.0}) {
    const double c = rosenblatt_cumulant({{{0.0, 1.0}, {0.0, t}}, {1.0, 1.0}, 2}, H);
    const double var_sum = 1.0 + std::pow(t, 2 * H) + 2.0 * fbm_cov(H, 1.0, t);
    EXPECT_NEAR(c, var_sum, 1e-5 * var_sum) << "t=" << t;
  }
}

TEST(Rosenblatt, PathsVanishAtZeroAndAreCentred) {
  const auto s = RosenblattScheme::make(0.75, 64, 0.05);
  const auto e = simulate_rosenblatt(GridSpec(-1.0, 1.0, 9), s, 4000, 4);
  EXPECT_EQ(e.values.row(4).cwiseAbs().maxCoeff(), 0.0);
  const double m = e.values.row(8).mean();
  EXPECT_NEAR(m, 0.0, 4.5 / std::sqrt(4000.0));
}

}  // namespace
}  // namespace volterra
