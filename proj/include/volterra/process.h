#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "volterra/grid.h"

namespace volterra {

enum class ProcessTag { fbm, rosenblatt, custom };

std::string to_string(ProcessTag t);

/// Sample paths on a grid; column p of `values` is path p. Every path is 0 at t = 0.
struct Ensemble {
  GridSpec grid;
  ProcessTag tag = ProcessTag::custom;
  Eigen::MatrixXd values;  // grid.size() x n_paths

  Ensemble(GridSpec g, ProcessTag t, Eigen::MatrixXd v);
  std::size_t n_paths() const { return static_cast<std::size_t>(values.cols()); }
  /// b_t - b_s for every path; s and t must sit on the grid.
  Eigen::VectorXd increment(double s, double t) const;
  /// Sub-ensemble of paths [first, first + count).
  Ensemble paths(std::size_t first, std::size_t count) const;
};

enum class FbmMethod {
  cholesky,   // dense factorization of the two-sided covariance
  circulant,  // exact circulant embedding of the stationary increments
};

inline constexpr std::size_t kMaxDenseGrid = 8192;

/// fBm with Hurst H on `grid`. Cholesky is capped at kMaxDenseGrid points.
/// `first_path` offsets the generator index, so a block of an ensemble can be
/// produced on its own. Throws FactorizationError if the covariance is not
/// positive definite even after jitter 1e-12 trace.
Ensemble simulate_fbm(const GridSpec& grid, double H, std::size_t n_paths, std::uint64_t seed,
                      FbmMethod method = FbmMethod::cholesky, std::uint64_t stream = 1,
                      std::size_t first_path = 0);

/// Rosenblatt discretization. The process is R_t - R_s = int_s^t :Z_u^2: du with
/// Z Gaussian of covariance sigma |u - v|^(H-1); the scheme replaces Z by its
/// averages over cells of width h <= 1 / cells_per_unit, which are an exactly
/// simulable stationary sequence, and sums h (Y_k^2 - E Y_k^2).
struct RosenblattScheme {
  double H = 0.75;
  double A_H = 0.0;
  double sigma = 0.0;
  int cells_per_unit = 512;
  double disc_tol = 0.01;  // max |relative variance bias| over a unit interval

  static RosenblattScheme make(double H, int cells_per_unit = 512, double disc_tol = 0.01);

  /// Autocovariance of the cell averages at lag j for cell width h.
  double cell_cov(double h, long j) const;
  /// Var(R^h over an interval of n cells) = 2 h^2 sum_{j,k < n} gamma(j-k)^2.
  double interval_variance(double h, long n) const;
  /// Relative variance bias over [0, 1] at cell width 1 / round(1 / h).
  double unit_variance_bias(double h) const;
  /// Cell width used on a grid step dt: dt / ceil(dt cells_per_unit).
  double cell_width(double dt) const;
};

/// Throws ConfigurationError, carrying the bias, when it exceeds disc_tol.
Ensemble simulate_rosenblatt(const GridSpec& grid, const RosenblattScheme& scheme,
                             std::size_t n_paths, std::uint64_t seed, std::uint64_t stream = 2,
                             std::size_t first_path = 0);

/// Exact covariance of grid increments under the Rosenblatt scheme, as a
/// function of the lag in grid steps.
std::vector<double> rosenblatt_step_cov(const RosenblattScheme& scheme, double dt,
                                        std::size_t max_lag);

/// Exact k-th cumulant (k >= 2) of the scheme's increment over `n_cells` cells of width h:
/// 2^(k-1) (k-1)! tr((h Gamma)^k).
double rosenblatt_scheme_cumulant(const RosenblattScheme& scheme, double h, long n_cells, int k);

/// Cumulant quadrature for a linear combination sum_i theta_i (R_{t_i} - R_{s_i}).
struct CumulantSpec {
  std::vector<std::pair<double, double>> intervals;
  std::vector<double> thetas;
  int order = 2;
};

/// kappa_k = 2^(k-1) (k-1)! sigma^k sum theta_{r1}..theta_{rk} S(I_{r1},..,I_{rk}),
/// S the cyclic integral of prod |x_i - x_{i+1}|^(H-1). k in {2, 3, 4}.
double rosenblatt_cumulant(const CumulantSpec& spec, double H);

}  // namespace volterra

#include "volterra/diagnostics.h"

namespace volterra {

enum class Pairing {
  disjoint,  // reference and shifted vectors come from disjoint halves of the paths
  shared,    // both from every path; only meaningful as a sanity check (h = 0 gives 0)
};

/// Two-sample tests of (b_{t_j} - b_{s_j})_j against (b_{t_j+h} - b_{s_j+h})_j,
/// one per shift h, Bonferroni-combined.
MultiTestReport check_increment_stationarity(const Ensemble& e,
                                             const std::vector<std::pair<double, double>>& intervals,
                                             const std::vector<double>& shifts,
                                             const EnergyOptions& opt = {},
                                             Pairing pairing = Pairing::disjoint);

/// Two-sample test of (b_{t_j} - b_{s_j})_j against (b_{-s_j} - b_{-t_j})_j.
TwoSampleReport check_increment_reflexivity(const Ensemble& e,
                                            const std::vector<std::pair<double, double>>& intervals,
                                            const EnergyOptions& opt = {});

}  // namespace volterra
