#include "volterra/diagnostics.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "volterra/error.h"
#include "volterra/kernels.h"
#include "volterra/spde.h"

namespace volterra {

namespace {

// Orders a pair of samples canonically so that (A, B) and (B, A) give the same test.
bool comes_first(const Samples& A, const Samples& B) {
  if (A.rows() != B.rows()) return A.rows() < B.rows();
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (A(i, j) != B(i, j)) return A(i, j) < B(i, j);
  return true;
}

}  // namespace

TwoSampleReport energy_two_sample(const Samples& A_in, const Samples& B_in,
                                  const EnergyOptions& opt) {
  if (A_in.cols() != B_in.cols()) throw PreconditionError("energy test: dimension mismatch");
  if (A_in.rows() < 50 || B_in.rows() < 50)
    throw PreconditionError("energy test: need at least 50 samples each");
  const Samples& A0 = comes_first(A_in, B_in) ? A_in : B_in;
  const Samples& B0 = comes_first(A_in, B_in) ? B_in : A_in;
  const Eigen::Index na = std::min<Eigen::Index>(A0.rows(), static_cast<Eigen::Index>(opt.max_per_sample));
  const Eigen::Index nb = std::min<Eigen::Index>(B0.rows(), static_cast<Eigen::Index>(opt.max_per_sample));

  Samples pooled(na + nb, A0.cols());
  pooled << A0.topRows(na), B0.topRows(nb);

  TwoSampleReport r;
  r.name = "energy";
  r.level = opt.level;
  r.n_permutations = opt.n_perm;
  Eigen::MatrixXd D;
  kernels::omp::pairwise_distances(pooled, D);
  if (D.maxCoeff() == 0.0) {
    r.statistic = 0.0;
    r.p_value = 1.0;
    r.pass = true;
    return r;
  }
  std::vector<char> is_a(static_cast<std::size_t>(na + nb), 0);
  std::fill(is_a.begin(), is_a.begin() + na, 1);
  r.statistic = kernels::energy_statistic(D, is_a);
  std::vector<double> perm;
  kernels::omp::energy_permutations(D, static_cast<std::size_t>(na), opt.n_perm, opt.seed, perm);
  std::size_t ge = 0;
  for (double s : perm) ge += s >= r.statistic ? 1 : 0;
  r.p_value = (1.0 + static_cast<double>(ge)) / (1.0 + static_cast<double>(opt.n_perm));
  r.pass = r.p_value >= opt.level;
  return r;
}

double kolmogorov_tail(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 0.2) return 1.0;
  double s = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    s += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(s, 0.0, 1.0);
}

TwoSampleReport projected_ks(const Samples& A, const Samples& B, const Eigen::VectorXd& direction,
                             double level) {
  if (A.cols() != B.cols() || A.cols() != direction.size())
    throw PreconditionError("projected KS: dimension mismatch");
  if (A.rows() == 0 || B.rows() == 0) throw PreconditionError("projected KS: empty sample");
  Eigen::VectorXd a = A * direction, b = B * direction;
  std::sort(a.data(), a.data() + a.size());
  std::sort(b.data(), b.data() + b.size());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  double d = 0.0;
  Eigen::Index i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double ne = std::sqrt(na * nb / (na + nb));
  TwoSampleReport r;
  r.name = "ks";
  r.statistic = d;
  r.level = level;
  r.p_value = kolmogorov_tail((ne + 0.12 + 0.11 / ne) * d);
  r.pass = r.p_value >= level;
  return r;
}

Eigen::MatrixXd principal_directions(const Samples& A, const Samples& B) {
  Samples pooled(A.rows() + B.rows(), A.cols());
  pooled << A, B;
  const Eigen::RowVectorXd mean = pooled.colwise().mean();
  const Samples c = pooled.rowwise() - mean;
  const Eigen::MatrixXd cov = c.transpose() * c / std::max<double>(1.0, pooled.rows() - 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  return es.eigenvectors().rowwise().reverse();
}

MultiTestReport bonferroni(std::vector<TwoSampleReport> tests, double family_level) {
  MultiTestReport m;
  m.family_level = family_level;
  const double each = family_level / static_cast<double>(std::max<std::size_t>(1, tests.size()));
  for (auto& t : tests) {
    t.level = each;
    t.pass = t.p_value >= each;
    m.pass = m.pass && t.pass;
  }
  m.tests = std::move(tests);
  return m;
}

CharFunctionalEstimate char_functional(const Samples& X, const Eigen::VectorXd& h) {
  if (h.size() != X.cols()) throw PreconditionError("char_functional: dimension mismatch");
  if (h.isZero(0.0)) throw PreconditionError("char_functional: direction must be nonzero");
  if (X.rows() < 2) throw PreconditionError("char_functional: need at least two samples");
  const Eigen::VectorXd arg = X * h;
  const Eigen::ArrayXd c = arg.array().cos(), s = arg.array().sin();
  const double n = static_cast<double>(X.rows());
  CharFunctionalEstimate e;
  e.h = h;
  e.value = {c.mean(), s.mean()};
  e.stderr_re = std::sqrt((c - c.mean()).square().sum() / (n - 1.0) / n);
  e.stderr_im = std::sqrt((s - s.mean()).square().sum() / (n - 1.0) / n);
  return e;
}

std::string summary(const TwoSampleReport& r) {
  std::ostringstream os;
  os << r.name << ": statistic=" << r.statistic << " p=" << r.p_value << " level=" << r.level
     << (r.pass ? " PASS" : " FAIL");
  return os.str();
}

std::string summary(const MultiTestReport& r) {
  std::ostringstream os;
  os << "family level " << r.family_level << ", " << r.tests.size() << " tests"
     << (r.pass ? " PASS" : " FAIL") << "\n";
  for (const auto& t : r.tests) os << "  " << summary(t) << "\n";
  return os.str();
}

TraceTrend trace_trend(const EquationSpec& spec, const std::vector<double>& t_grid) {
  if (t_grid.size() < 2) throw PreconditionError("trace_trend: need at least two times");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1])) throw PreconditionError("trace_trend: times must increase");
  if (!(t_grid.front() >= 0.0)) throw PreconditionError("trace_trend: times must be >= 0");
  TraceTrend r;
  r.t = t_grid;
  for (double t : t_grid) r.trace.push_back(covariance_qt(spec, t).m.trace());
  // least squares slope of log trace against log t over the upper half
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (std::size_t i = t_grid.size() / 2; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0 && r.trace[i] > 0.0)) continue;
    const double x = std::log(t_grid[i]), y = std::log(r.trace[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m >= 2) r.exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  r.bounded = r.exponent <= 0.05;
  return r;
}

}  // namespace volterra
