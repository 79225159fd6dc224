#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "volterra/diagnostics.h"
#include "volterra/kernel.h"
#include "volterra/process.h"

namespace volterra {

/// f = sum_j f_j 1_[t_{j-1}, t_j) with values in R^m.
class StepFunction {
 public:
  StepFunction(std::vector<double> breakpoints, std::vector<Eigen::VectorXd> values);
  /// Scalar convenience.
  StepFunction(std::vector<double> breakpoints, const std::vector<double>& values);

  const std::vector<double>& breakpoints() const { return t_; }
  const std::vector<Eigen::VectorXd>& values() const { return f_; }
  std::size_t pieces() const { return f_.size(); }
  Eigen::Index dim() const { return f_.front().size(); }
  Eigen::VectorXd operator()(double r) const;

  StepFunction scaled(double a) const;
  /// a f + b g on the union of breakpoints.
  static StepFunction combine(double a, const StepFunction& f, double b, const StepFunction& g);

 private:
  std::vector<double> t_;
  std::vector<Eigen::VectorXd> f_;
};

/// Integrand r -> R^m on bounded intervals.
struct IntegrandFn {
  std::function<Eigen::VectorXd(double)> f;
  Eigen::Index dim = 1;

  static IntegrandFn scalar(std::function<double(double)> g);
  /// ||f||_{L^q[s,t]} with q = 2 / (1 + 2 alpha); throws IntegrandError if not finite.
  double lq_norm(double s, double t, double alpha) const;
};

/// (K* f)(r) = int_r^inf f(u) dK/du(u, r) du.
Eigen::VectorXd kstar(const VolterraKernel& k, const StepFunction& f, double r);

struct DNorm {
  double value = 0.0;     // phi double-integral form
  double via_kstar = 0.0; // int |K* f|^2 dr
  double rel_discrepancy = 0.0;
};

/// Squared D-norm by both routes; throws ConsistencyError when they differ by more than rel_tol.
DNorm d_norm(const VolterraKernel& k, const StepFunction& f, double rel_tol = 1e-3);
double d_norm_sq(const VolterraKernel& k, const StepFunction& f);

/// E <i(f), i(g)> = sum_{i,j} <f_i, g_j> R(piece_i, piece_j).
double inner_product(const VolterraKernel& k, const StepFunction& f, const StepFunction& g);

/// Pathwise sum_j f_j (b_{t_j} - b_{t_{j-1}}) for every path: n_paths x m.
/// Breakpoints snap to the grid within dt/2; otherwise AlignmentError.
Eigen::MatrixXd integrate_step(const StepFunction& f, const Ensemble& e);

/// Cell-average step approximation of f on [s, t] with n_sub equal pieces.
/// n_sub = 0 uses one piece per grid step. Piece ends must land on the grid.
StepFunction cell_average(const IntegrandFn& f, double s, double t, std::size_t n_sub,
                          const GridSpec& grid);

/// i_{s,t}(f) by cell averages; n_paths x m.
Eigen::MatrixXd definite_integral(const IntegrandFn& f, double s, double t, const Ensemble& e,
                                  std::size_t n_sub = 0);

struct LawSymmetryReport {
  MultiTestReport tests;  // (reversed, forward), (forward, reflected), (reversed, reflected)
};

/// Compares int_0^t f(t-r) db_r, int_0^t f(r) db_r and int_{-t}^0 f(-u) db_u on
/// disjoint thirds of the paths, pairwise energy tests, Bonferroni-combined.
LawSymmetryReport check_law_symmetries(const IntegrandFn& f, double t, const Ensemble& e,
                                       const EnergyOptions& opt = {});

}  // namespace volterra
