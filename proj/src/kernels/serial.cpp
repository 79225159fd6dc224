#include "common.h"

namespace volterra::kernels {

namespace {
int g_workers = 0;
}

void set_workers(int n) { g_workers = n < 0 ? 0 : n; }
int workers() { return g_workers; }

double energy_statistic(const Eigen::MatrixXd& D, const std::vector<char>& is_a) {
  const Eigen::Index n = D.rows();
  double s_aa = 0.0, s_bb = 0.0, s_ab = 0.0;
  double n_a = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const bool ai = is_a[static_cast<std::size_t>(i)] != 0;
    n_a += ai ? 1.0 : 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const bool aj = is_a[static_cast<std::size_t>(j)] != 0;
      const double d = D(i, j);
      if (ai && aj)
        s_aa += d;
      else if (!ai && !aj)
        s_bb += d;
      else
        s_ab += d;
    }
  }
  const double n_b = static_cast<double>(n) - n_a;
  // off-diagonal sums count each pair once; the full double sums are twice that
  const double e = 2.0 * s_ab / (n_a * n_b) - 2.0 * s_aa / (n_a * n_a) - 2.0 * s_bb / (n_b * n_b);
  return n_a * n_b / (n_a + n_b) * e;
}

namespace serial {

void cholesky_paths(const Eigen::MatrixXd& L, const PathStream& ps, Eigen::MatrixXd& out) {
  Eigen::VectorXd z;
  for (Eigen::Index p = 0; p < out.cols(); ++p) detail::cholesky_one(L, ps, p, z, out);
}

void circulant_paths(const CirculantPlan& plan, const PathStream& ps, Eigen::MatrixXd& out) {
  detail::FftWork w;
  for (Eigen::Index p = 0; p < out.cols(); ++p) detail::circulant_one(plan, ps, p, w, out);
}

void ou_filter(const Eigen::MatrixXd& incr, double decay, double weight, Eigen::MatrixXd& out) {
  out.resize(incr.rows() + 1, incr.cols());
  for (Eigen::Index p = 0; p < incr.cols(); ++p) detail::ou_one(incr, decay, weight, p, out);
}

void pairwise_distances(const Eigen::MatrixXd& X, Eigen::MatrixXd& D) {
  D.resize(X.rows(), X.rows());
  for (Eigen::Index i = 0; i < X.rows(); ++i) detail::distance_row(X, i, D);
}

void energy_permutations(const Eigen::MatrixXd& D, std::size_t n_a, std::size_t n_perm,
                         std::uint64_t seed, std::vector<double>& stats) {
  stats.assign(n_perm, 0.0);
  for (std::size_t i = 0; i < n_perm; ++i) stats[i] = detail::permutation_stat(D, n_a, seed, i);
}

double exp_weighted_sum(const std::vector<double>& lambda, const std::vector<double>& w,
                        double r) {
  const std::size_t blocks = (lambda.size() + detail::kSumBlock - 1) / detail::kSumBlock;
  double s = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) s += detail::exp_block(lambda, w, r, b);
  return s;
}

}  // namespace serial
}  // namespace volterra::kernels
