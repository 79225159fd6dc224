#pragma once

// Hot loops, each in a plain serial version and an OpenMP version. The two
// produce bit-identical output: every path or permutation owns its generator
// and every reduction uses a fixed blocking that does not depend on threads.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace volterra::kernels {

/// Caps the number of OpenMP threads used by the omp:: variants (0 = runtime default).
void set_workers(int n);
int workers();

struct PathStream {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::size_t first_path = 0;  // column p draws from generator index first_path + p
};

/// Half-spectrum of a circulant embedding, already scaled: sqrt(lambda_k / M).
struct CirculantPlan {
  Eigen::VectorXd sqrt_eig;  // size M
  std::size_t n_out = 0;     // leading entries of each transform kept, <= M / 2
};

namespace serial {

/// out.col(p) = L z_p with L lower triangular.
void cholesky_paths(const Eigen::MatrixXd& L, const PathStream& ps, Eigen::MatrixXd& out);
/// out.col(p) = first n_out entries of Re FFT(sqrt_eig .* (xi + i eta)).
void circulant_paths(const CirculantPlan& plan, const PathStream& ps, Eigen::MatrixXd& out);
/// Row i+1 = decay * row i + weight * incr.row(i); row 0 = 0.
void ou_filter(const Eigen::MatrixXd& incr, double decay, double weight, Eigen::MatrixXd& out);
/// Euclidean distances between rows of X.
void pairwise_distances(const Eigen::MatrixXd& X, Eigen::MatrixXd& D);
/// Energy statistics of n_perm random relabelings of the pooled sample.
void energy_permutations(const Eigen::MatrixXd& D, std::size_t n_a, std::size_t n_perm,
                         std::uint64_t seed, std::vector<double>& stats);
/// sum_n w_n exp(-2 lambda_n r) with fixed blocking.
double exp_weighted_sum(const std::vector<double>& lambda, const std::vector<double>& w, double r);

}  // namespace serial

namespace omp {

void cholesky_paths(const Eigen::MatrixXd& L, const PathStream& ps, Eigen::MatrixXd& out);
void circulant_paths(const CirculantPlan& plan, const PathStream& ps, Eigen::MatrixXd& out);
void ou_filter(const Eigen::MatrixXd& incr, double decay, double weight, Eigen::MatrixXd& out);
void pairwise_distances(const Eigen::MatrixXd& X, Eigen::MatrixXd& D);
void energy_permutations(const Eigen::MatrixXd& D, std::size_t n_a, std::size_t n_perm,
                         std::uint64_t seed, std::vector<double>& stats);
double exp_weighted_sum(const std::vector<double>& lambda, const std::vector<double>& w, double r);

}  // namespace omp

/// Energy statistic n m / (n + m) (2 E|a-b| - E|a-a'| - E|b-b'|) for the split
/// where `is_a` marks sample A. Shared by both variants.
double energy_statistic(const Eigen::MatrixXd& D, const std::vector<char>& is_a);

}  // namespace volterra::kernels
