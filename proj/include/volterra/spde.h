#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "volterra/diagnostics.h"
#include "volterra/grid.h"
#include "volterra/process.h"

namespace volterra {

enum class NoiseFamily { fbm, rosenblatt };

std::string to_string(NoiseFamily f);
NoiseFamily noise_family_from_string(const std::string& s);

/// Independent scalar noises b^(k), k < N_U, all with the same H.
struct NoiseSpec {
  double H = 0.75;
  std::vector<NoiseFamily> families{NoiseFamily::fbm};
  bool independent = true;
  int cells_per_unit = 512;  // Rosenblatt scheme resolution
  double disc_tol = 0.01;
  FbmMethod fbm_method = FbmMethod::circulant;

  std::size_t size() const { return families.size(); }
  double alpha() const { return H - 0.5; }
};

enum class InitialKind { deterministic, ensemble, x_infinity };

std::string to_string(InitialKind k);

struct InitialCondition {
  InitialKind kind = InitialKind::deterministic;
  Eigen::VectorXd x;        // deterministic: N_V entries (empty means 0)
  Eigen::MatrixXd samples;  // ensemble: n_paths x N_V
  double T_trunc = 40.0;    // x_infinity: noise starts at -T_trunc
};

/// dX = A X dt + Phi dB with A = -diag(lambda) on R^{N_V}.
struct EquationSpec {
  Eigen::VectorXd lambda;
  Eigen::MatrixXd Phi;  // N_V x N_U
  NoiseSpec noise;
  InitialCondition x0;

  std::size_t dim() const { return static_cast<std::size_t>(lambda.size()); }
  /// Throws PreconditionError on inconsistent sizes or non-finite entries.
  void validate() const;
  /// w_n = sum_k Phi_nk^2.
  std::vector<double> mode_weights() const;
};

/// Paths of an R^{N_V}-valued process: coords[n] is grid.size() x n_paths.
struct VectorEnsemble {
  GridSpec grid;
  std::vector<Eigen::MatrixXd> coords;

  std::size_t n_paths() const { return coords.empty() ? 0 : static_cast<std::size_t>(coords[0].cols()); }
  /// X_t for every path: n_paths x N_V.
  Samples at(double t) const;
};

struct CovMatrix {
  Eigen::MatrixXd m;
  double t = 0.0;
};

struct CheckResult {
  bool pass = false;
  double value = 0.0;
  double error = 0.0;  // tail or truncation bound where relevant
  std::string message;
};

/// int_0^T0 ||S(r) Phi||_HS^(2/(1+2 alpha)) dr.
CheckResult check_H(const EquationSpec& spec, double T0 = 1.0);
CheckResult check_H(const std::vector<double>& lambda, const std::vector<double>& weights,
                    double alpha, double T0 = 1.0);
/// Same integral for an arbitrary r -> ||S(r) Phi||_HS^2.
CheckResult check_H(const std::function<double(double)>& hs_norm_sq, double alpha, double T0 = 1.0);

/// int_0^inf ||S(r) Phi||_HS^(2/(1+2 alpha)) dr: quadrature head plus a
/// closed-form tail bound. Fails when a mode with lambda <= 0 carries noise.
CheckResult check_limit_condition(const EquationSpec& spec);
CheckResult check_limit_condition(const std::vector<double>& lambda,
                                  const std::vector<double>& weights, double alpha);

/// X on `grid` (t_min must be 0). Noise component k is simulated with stream
/// noise + k. With x0 = x_infinity the noise starts at -T_trunc, so X_0 is
/// the truncated stationary initial condition driven by the same paths.
/// Throws ConditionError if check_H(spec, T0) fails.
VectorEnsemble solve_mild(const EquationSpec& spec, const GridSpec& grid, std::size_t n_paths,
                          std::uint64_t seed, double T0 = 1.0);

/// q_t = int_0^t int_0^t S(t-u) Phi Phi* S(t-v) phi(u, v) du dv.
CovMatrix covariance_qt(const EquationSpec& spec, double t);
/// g(r, s) = int_0^r int_0^s S(r-u) Phi Phi* S(s-v) phi(u, v) du dv.
CovMatrix covariance_g(const EquationSpec& spec, double r, double s);
/// lim q_t as q_T with the neglected part bounded by 1e-8 trace.
CovMatrix covariance_q_infinity(const EquationSpec& spec);
/// The same limit in closed form, H Gamma(2H) (l_i^(1-2H) + l_j^(1-2H)) / (l_i + l_j) (Phi Phi*)_ij.
CovMatrix covariance_q_infinity_closed(const EquationSpec& spec);

/// Exact covariance of the simulated Z_r, Z_s (same cell scheme, same noise
/// increments law) on `grid`, noise starting at grid.t_min().
CovMatrix covariance_g_discrete(const EquationSpec& spec, const GridSpec& grid, double r,
                                double s);

/// E |Z_t - Z_s|^2 by quadrature, 0 <= s <= t.
double mean_square_increment(const EquationSpec& spec, double s, double t);

struct XInfinitySample {
  Samples x;                  // n_paths x N_V
  double truncation_ms = 0.0; // E |Z''_inf - Z''_T|^2, exact for diagonal specs
  double tail_bound = 0.0;    // bound on int_T^inf ||S(r) Phi||_HS^(2/(1+2 alpha)) dr
};

/// Z''_T = int_{-T}^0 S(-u) Phi dB_u sampled on a grid of step dt.
XInfinitySample sample_x_infinity(const EquationSpec& spec, double T_trunc, double dt,
                                  std::size_t n_paths, std::uint64_t seed);

struct TraceTrend {
  std::vector<double> t;
  std::vector<double> trace;
  double exponent = 0.0;  // log-log slope over the upper half of t
  bool bounded = true;
};

/// Tr q_t along t_grid; growing if the fitted exponent exceeds 0.05.
TraceTrend trace_trend(const EquationSpec& spec, const std::vector<double>& t_grid);

}  // namespace volterra
