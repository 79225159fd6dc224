#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace volterra::app {

struct Check {
  std::string name;
  bool pass = false;
  std::vector<std::string> details;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const;
};

std::string summary(const SuiteReport& r);

/// phi quadrature vs H(2H-1)|u-v|^(2H-2) at `pairs` random pairs per H.
Check kernel_closed_form(const std::vector<double>& Hs, int pairs, double rel_tol, std::uint64_t seed);
/// Kernel regularity bound and the increment moment bound C |t-s|^(1+2 alpha).
Check kernel_bounds(double H);
/// MC variance of W_1 against 1, plus the kernel normalization int (K(1,r) - K(0,r))^2 dr = 1.
Check fbm_normalization(const std::vector<double>& Hs, std::size_t paths, std::uint64_t seed);
/// Rosenblatt variance, covariance at 10 (s, t) pairs and third cumulant.
Check rosenblatt_moments(double H, std::size_t paths, std::uint64_t seed);
/// Var of the stochastic integral of random step functions against the D-norm.
Check isometry(double H, int n_functions, std::size_t paths, std::uint64_t seed);
/// Reversed, forward and reflected integrals compared by energy tests, two integrands.
Check law_symmetries(const std::string& family, double H, std::size_t paths, std::uint64_t seed);
/// Stationarity and reflexivity of the scalar increments.
Check increment_laws(const std::string& family, double H, std::size_t paths, std::uint64_t seed);
/// MC covariance of Z vs q_t and g(r, s) for a 4-mode diagonal equation.
Check covariance_operators(std::size_t paths, std::uint64_t seed);
/// Law(X_t^x) approaches the x_infinity surrogate as t grows.
Check limiting_measure(std::size_t paths, std::uint64_t seed);
/// Joint laws of the x_infinity solution are shift invariant.
Check stationary_solution(std::size_t paths, std::uint64_t seed);
/// Sharp beta > H + 1/2 threshold, J closed form vs quadrature, Wiener contrast.
Check shift_threshold(const std::vector<double>& Hs);
/// d < 4H admissibility table and the Hilbert-Schmidt decay exponent.
Check heat_example();

struct SuiteOptions {
  double H = 0.75;
  std::size_t paths = 0;  // 0: suite default
  std::uint64_t seed = 0;
  std::string family = "fbm";
  std::string x0 = "deterministic";
};

/// Suite names: kernel, isometry, law-symmetry, stationarity, limit, criteria.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);
std::vector<std::string> suite_names();
/// Suites that draw random numbers and therefore need a seed.
bool suite_is_stochastic(const std::string& name);
std::size_t default_paths(const std::string& name);

}  // namespace volterra::app
