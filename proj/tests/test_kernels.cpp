#include <cmath>

#include <gtest/gtest.h>

#include "volterra/kernels.h"
#include "volterra/rng.h"

namespace volterra::kernels {
namespace {

Eigen::MatrixXd lower(int n) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Random(n, n);
  A = A * A.transpose() + n * Eigen::MatrixXd::Identity(n, n);
  return A.llt().matrixL();
}

class WorkerCounts : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override { set_workers(GetParam()); }
  void TearDown() override { set_workers(0); }
};

TEST_P(WorkerCounts, CholeskyBitIdentical) {
  const auto L = lower(17);
  Eigen::MatrixXd a(17, 33), b(17, 33);
  const PathStream ps{5, 1, 3};
  serial::cholesky_paths(L, ps, a);
  omp::cholesky_paths(L, ps, b);
  EXPECT_TRUE(a == b);
}

TEST_P(WorkerCounts, CirculantBitIdentical) {
  CirculantPlan plan;
  plan.sqrt_eig = Eigen::VectorXd::LinSpaced(64, 0.1, 1.0);
  plan.n_out = 20;
  Eigen::MatrixXd a, b;
  a.resize(20, 9);
  b.resize(20, 9);
  serial::circulant_paths(plan, {7, 2, 0}, a);
  omp::circulant_paths(plan, {7, 2, 0}, b);
  EXPECT_TRUE(a == b);
}

TEST_P(WorkerCounts, OuFilterBitIdentical) {
  const Eigen::MatrixXd incr = Eigen::MatrixXd::Random(50, 13);
  Eigen::MatrixXd a, b;
  serial::ou_filter(incr, 0.97, 0.985, a);
  omp::ou_filter(incr, 0.97, 0.985, b);
  EXPECT_TRUE(a == b);
  ASSERT_EQ(a.rows(), 51);
  EXPECT_EQ(a.row(0).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_DOUBLE_EQ(a(2, 4), 0.97 * 0.985 * incr(0, 4) + 0.985 * incr(1, 4));
}

TEST_P(WorkerCounts, DistancesAndPermutationsBitIdentical) {
  const Eigen::MatrixXd X = Eigen::MatrixXd::Random(60, 3);
  Eigen::MatrixXd Da, Db;
  serial::pairwise_distances(X, Da);
  omp::pairwise_distances(X, Db);
  EXPECT_TRUE(Da == Db);
  std::vector<double> sa, sb;
  serial::energy_permutations(Da, 25, 40, 11, sa);
  omp::energy_permutations(Db, 25, 40, 11, sb);
  EXPECT_EQ(sa, sb);
}

TEST_P(WorkerCounts, ExpWeightedSumBitIdentical) {
  std::vector<double> lam, w;
  for (int i = 0; i < 1000; ++i) {
    lam.push_back(0.01 * (i + 1));
    w.push_back(1.0 / (i + 1));
  }
  EXPECT_EQ(serial::exp_weighted_sum(lam, w, 0.3), omp::exp_weighted_sum(lam, w, 0.3));
}

INSTANTIATE_TEST_SUITE_P(Threads, WorkerCounts, ::testing::Values(1, 2, 3, 4));

TEST(EnergyStatistic, ZeroForIdenticalHalves) {
  Eigen::MatrixXd X(4, 1);
  X << 0.0, 1.0, 0.0, 1.0;
  Eigen::MatrixXd D;
  serial::pairwise_distances(X, D);
  EXPECT_NEAR(energy_statistic(D, {1, 1, 0, 0}), 0.0, 1e-15);
  EXPECT_GT(energy_statistic(D, {1, 0, 1, 0}), 0.0);
}

TEST(Rng, StreamsAreIndependentAndRepeatable) {
  auto a = make_engine(1, 1, 0), b = make_engine(1, 1, 0), c = make_engine(1, 2, 0), d = make_engine(1, 1, 1);
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  EXPECT_NE(x, d());
}

TEST(Rng, NormalsHaveUnitVariance) {
  auto eng = make_engine(3, 1, 0);
  std::vector<double> z(200000);
  fill_normal(eng, z.data(), z.size());
  double m = 0, v = 0;
  for (double x : z) m += x;
  m /= z.size();
  for (double x : z) v += (x - m) * (x - m);
  v /= z.size();
  EXPECT_NEAR(m, 0.0, 0.01);
  EXPECT_NEAR(v, 1.0, 0.015);
}

}  // namespace
}  // namespace volterra::kernels
