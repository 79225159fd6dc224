#include <omp.h>

#include "common.h"

namespace volterra::kernels::omp {

namespace {

int threads() {
  const int w = workers();
  return w > 0 ? w : omp_get_max_threads();
}

}  // namespace

void cholesky_paths(const Eigen::MatrixXd& L, const PathStream& ps, Eigen::MatrixXd& out) {
#pragma omp parallel num_threads(threads())
  {
    Eigen::VectorXd z;
#pragma omp for schedule(static)
    for (Eigen::Index p = 0; p < out.cols(); ++p) detail::cholesky_one(L, ps, p, z, out);
  }
}

void circulant_paths(const CirculantPlan& plan, const PathStream& ps, Eigen::MatrixXd& out) {
#pragma omp parallel num_threads(threads())
  {
    detail::FftWork w;
#pragma omp for schedule(static)
    for (Eigen::Index p = 0; p < out.cols(); ++p) detail::circulant_one(plan, ps, p, w, out);
  }
}

void ou_filter(const Eigen::MatrixXd& incr, double decay, double weight, Eigen::MatrixXd& out) {
  out.resize(incr.rows() + 1, incr.cols());
#pragma omp parallel for schedule(static) num_threads(threads())
  for (Eigen::Index p = 0; p < incr.cols(); ++p) detail::ou_one(incr, decay, weight, p, out);
}

void pairwise_distances(const Eigen::MatrixXd& X, Eigen::MatrixXd& D) {
  D.resize(X.rows(), X.rows());
#pragma omp parallel for schedule(static) num_threads(threads())
  for (Eigen::Index i = 0; i < X.rows(); ++i) detail::distance_row(X, i, D);
}

void energy_permutations(const Eigen::MatrixXd& D, std::size_t n_a, std::size_t n_perm,
                         std::uint64_t seed, std::vector<double>& stats) {
  stats.assign(n_perm, 0.0);
  const auto n = static_cast<std::ptrdiff_t>(n_perm);
#pragma omp parallel for schedule(dynamic) num_threads(threads())
  for (std::ptrdiff_t i = 0; i < n; ++i)
    stats[static_cast<std::size_t>(i)] =
        detail::permutation_stat(D, n_a, seed, static_cast<std::size_t>(i));
}

double exp_weighted_sum(const std::vector<double>& lambda, const std::vector<double>& w,
                        double r) {
  const std::size_t blocks = (lambda.size() + detail::kSumBlock - 1) / detail::kSumBlock;
  std::vector<double> part(blocks, 0.0);
  const auto nb = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static) num_threads(threads())
  for (std::ptrdiff_t b = 0; b < nb; ++b)
    part[static_cast<std::size_t>(b)] =
        detail::exp_block(lambda, w, r, static_cast<std::size_t>(b));
  double s = 0.0;
  for (double x : part) s += x;
  return s;
}

}  // namespace volterra::kernels::omp
