#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace volterra {

/// Rows are samples, columns are coordinates.
using Samples = Eigen::MatrixXd;

struct TwoSampleReport {
  std::string name;
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n_permutations = 0;
  double level = 0.01;
  bool pass = true;
};

struct EnergyOptions {
  std::size_t n_perm = 200;
  double level = 0.01;
  std::uint64_t seed = 0;
  std::size_t max_per_sample = 1500;  // leading rows kept when a sample is larger
};

/// Energy-distance two-sample test with a permutation p-value
/// (1 + #{perm >= observed}) / (1 + n_perm). The result does not depend on
/// the order of A and B. Needs >= 50 rows per sample and equal dimension.
TwoSampleReport energy_two_sample(const Samples& A, const Samples& B,
                                  const EnergyOptions& opt = {});

/// Two-sample Kolmogorov-Smirnov test of the projections onto `direction`.
TwoSampleReport projected_ks(const Samples& A, const Samples& B, const Eigen::VectorXd& direction,
                             double level = 0.01);

/// Asymptotic Kolmogorov tail P(K > x).
double kolmogorov_tail(double x);

/// Unit eigenvectors of the pooled sample covariance, largest eigenvalue first.
Eigen::MatrixXd principal_directions(const Samples& A, const Samples& B);

struct MultiTestReport {
  std::vector<TwoSampleReport> tests;
  double family_level = 0.01;
  bool pass = true;
};

/// Bonferroni: each test is re-judged at family_level / m.
MultiTestReport bonferroni(std::vector<TwoSampleReport> tests, double family_level);

struct CharFunctionalEstimate {
  Eigen::VectorXd h;
  std::complex<double> value;
  double stderr_re = 0.0;
  double stderr_im = 0.0;
  double stderr() const { return std::hypot(stderr_re, stderr_im); }
};

/// Monte-Carlo mean of exp(i <h, X>). Throws PreconditionError for h = 0.
CharFunctionalEstimate char_functional(const Samples& X, const Eigen::VectorXd& h);

/// Human-readable block for a report.
std::string summary(const TwoSampleReport& r);
std::string summary(const MultiTestReport& r);

}  // namespace volterra
