#pragma once

// Per-item bodies shared by the serial and OpenMP loops.

#include <algorithm>
#include <complex>
#include <numeric>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "volterra/kernels.h"
#include "volterra/rng.h"

namespace volterra::kernels::detail {

inline constexpr std::size_t kSumBlock = 4096;

inline void cholesky_one(const Eigen::MatrixXd& L, const PathStream& ps, Eigen::Index p,
                         Eigen::VectorXd& z, Eigen::MatrixXd& out) {
  auto eng = make_engine(ps.seed, ps.stream, ps.first_path + static_cast<std::size_t>(p));
  z.resize(L.cols());
  fill_normal(eng, z.data(), static_cast<std::size_t>(z.size()));
  out.col(p).noalias() = L.triangularView<Eigen::Lower>() * z;
}

struct FftWork {
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> in;
  std::vector<std::complex<double>> out;
  std::vector<double> xi;
};

inline void circulant_one(const CirculantPlan& plan, const PathStream& ps, Eigen::Index p,
                          FftWork& w, Eigen::MatrixXd& out) {
  const auto M = static_cast<std::size_t>(plan.sqrt_eig.size());
  auto eng = make_engine(ps.seed, ps.stream, ps.first_path + static_cast<std::size_t>(p));
  w.xi.resize(2 * M);
  fill_normal(eng, w.xi.data(), 2 * M);
  w.in.resize(M);
  for (std::size_t k = 0; k < M; ++k)
    w.in[k] = plan.sqrt_eig[static_cast<Eigen::Index>(k)] * std::complex<double>(w.xi[2 * k], w.xi[2 * k + 1]);
  w.fft.fwd(w.out, w.in);
  for (std::size_t j = 0; j < plan.n_out; ++j) out(static_cast<Eigen::Index>(j), p) = w.out[j].real();
}

inline void ou_one(const Eigen::MatrixXd& incr, double decay, double weight, Eigen::Index p,
                   Eigen::MatrixXd& out) {
  double u = 0.0;
  out(0, p) = 0.0;
  for (Eigen::Index i = 0; i < incr.rows(); ++i) {
    u = decay * u + weight * incr(i, p);
    out(i + 1, p) = u;
  }
}

inline void distance_row(const Eigen::MatrixXd& X, Eigen::Index i, Eigen::MatrixXd& D) {
  for (Eigen::Index j = 0; j < X.rows(); ++j) D(i, j) = (X.row(i) - X.row(j)).norm();
}

inline double permutation_stat(const Eigen::MatrixXd& D, std::size_t n_a, std::uint64_t seed,
                               std::size_t index) {
  const auto n = static_cast<std::size_t>(D.rows());
  std::vector<char> is_a(n, 0);
  std::fill(is_a.begin(), is_a.begin() + static_cast<std::ptrdiff_t>(n_a), 1);
  auto eng = make_engine(seed, stream_id(Stream::permutation), index);
  std::shuffle(is_a.begin(), is_a.end(), eng);
  return energy_statistic(D, is_a);
}

inline double exp_block(const std::vector<double>& lambda, const std::vector<double>& w, double r,
                        std::size_t b) {
  const std::size_t lo = b * kSumBlock;
  const std::size_t hi = std::min(lambda.size(), lo + kSumBlock);
  double s = 0.0;
  for (std::size_t i = lo; i < hi; ++i) s += w[i] * std::exp(-2.0 * lambda[i] * r);
  return s;
}

}  // namespace volterra::kernels::detail
