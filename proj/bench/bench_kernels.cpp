// Serial against OpenMP variants of the hot loops, plus the end-to-end samplers.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "volterra/kernels.h"
#include "volterra/process.h"
#include "volterra/spde.h"

namespace {

using namespace volterra;

Eigen::MatrixXd lower(int n) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Random(n, n);
  A = A * A.transpose() + n * Eigen::MatrixXd::Identity(n, n);
  return A.llt().matrixL();
}

template <bool Omp>
void BM_Cholesky(benchmark::State& st) {
  const auto L = lower(static_cast<int>(st.range(0)));
  Eigen::MatrixXd out(L.rows(), 256);
  for (auto _ : st) {
    if constexpr (Omp) kernels::omp::cholesky_paths(L, {1, 1, 0}, out);
    else kernels::serial::cholesky_paths(L, {1, 1, 0}, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Cholesky<false>)->Arg(128)->Arg(512)->Name("cholesky_paths/serial");
BENCHMARK(BM_Cholesky<true>)->Arg(128)->Arg(512)->Name("cholesky_paths/omp");

template <bool Omp>
void BM_Circulant(benchmark::State& st) {
  kernels::CirculantPlan plan;
  plan.sqrt_eig = Eigen::VectorXd::LinSpaced(st.range(0), 0.1, 1.0);
  plan.n_out = static_cast<std::size_t>(st.range(0) / 2);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(plan.n_out), 256);
  for (auto _ : st) {
    if constexpr (Omp) kernels::omp::circulant_paths(plan, {1, 1, 0}, out);
    else kernels::serial::circulant_paths(plan, {1, 1, 0}, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Circulant<false>)->Arg(1024)->Arg(8192)->Name("circulant_paths/serial");
BENCHMARK(BM_Circulant<true>)->Arg(1024)->Arg(8192)->Name("circulant_paths/omp");

template <bool Omp>
void BM_Distances(benchmark::State& st) {
  const Eigen::MatrixXd X = Eigen::MatrixXd::Random(st.range(0), 3);
  Eigen::MatrixXd D;
  for (auto _ : st) {
    if constexpr (Omp) kernels::omp::pairwise_distances(X, D);
    else kernels::serial::pairwise_distances(X, D);
    benchmark::DoNotOptimize(D.data());
  }
}
BENCHMARK(BM_Distances<false>)->Arg(1000)->Arg(3000)->Name("pairwise_distances/serial");
BENCHMARK(BM_Distances<true>)->Arg(1000)->Arg(3000)->Name("pairwise_distances/omp");

template <bool Omp>
void BM_Permutations(benchmark::State& st) {
  const Eigen::MatrixXd X = Eigen::MatrixXd::Random(st.range(0), 3);
  Eigen::MatrixXd D;
  kernels::serial::pairwise_distances(X, D);
  std::vector<double> stats;
  const auto n_a = static_cast<std::size_t>(st.range(0) / 2);
  for (auto _ : st) {
    if constexpr (Omp) kernels::omp::energy_permutations(D, n_a, 50, 3, stats);
    else kernels::serial::energy_permutations(D, n_a, 50, 3, stats);
    benchmark::DoNotOptimize(stats.data());
  }
}
BENCHMARK(BM_Permutations<false>)->Arg(1000)->Name("energy_permutations/serial");
BENCHMARK(BM_Permutations<true>)->Arg(1000)->Name("energy_permutations/omp");

template <bool Omp>
void BM_OuFilter(benchmark::State& st) {
  const Eigen::MatrixXd incr = Eigen::MatrixXd::Random(st.range(0), 2000);
  Eigen::MatrixXd out;
  for (auto _ : st) {
    if constexpr (Omp) kernels::omp::ou_filter(incr, 0.99, 0.995, out);
    else kernels::serial::ou_filter(incr, 0.99, 0.995, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_OuFilter<false>)->Arg(1000)->Name("ou_filter/serial");
BENCHMARK(BM_OuFilter<true>)->Arg(1000)->Name("ou_filter/omp");

void BM_SimulateFbm(benchmark::State& st) {
  const GridSpec g(0.0, 4.0, 2049);
  for (auto _ : st) benchmark::DoNotOptimize(simulate_fbm(g, 0.75, 1000, 1, FbmMethod::circulant).values.data());
}
BENCHMARK(BM_SimulateFbm)->Unit(benchmark::kMillisecond);

void BM_SimulateRosenblatt(benchmark::State& st) {
  const GridSpec g(0.0, 1.0, 65);
  const auto s = RosenblattScheme::make(0.75, 512);
  for (auto _ : st) benchmark::DoNotOptimize(simulate_rosenblatt(g, s, 200, 1).values.data());
}
BENCHMARK(BM_SimulateRosenblatt)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
