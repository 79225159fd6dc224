#include "volterra/process.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include <unsupported/Eigen/FFT>

#include "volterra/error.h"
#include "volterra/kernels.h"
#include "volterra/special.h"

namespace volterra {

namespace {

constexpr std::size_t kBatch = 256;

std::size_t require_zero(const GridSpec& g, const char* who) {
  if (!g.zero_index())
    throw PreconditionError(std::string(who) + ": grid must contain t = 0");
  return *g.zero_index();
}

// Circulant embedding of a stationary sequence of length n with autocovariance gamma.
template <class Gamma>
kernels::CirculantPlan circulant_plan(Gamma&& gamma, std::size_t n) {
  std::size_t M = 2;
  while (M < 2 * n) M *= 2;
  Eigen::FFT<double> fft;
  for (int attempt = 0; attempt < 6; ++attempt, M *= 2) {
    std::vector<std::complex<double>> c(M), lam;
    for (std::size_t j = 0; j <= M / 2; ++j) {
      const double g = gamma(static_cast<long>(j));
      c[j] = g;
      if (j > 0 && j < M / 2) c[M - j] = g;
    }
    fft.fwd(lam, c);
    double lmax = 0.0, lmin = 0.0;
    for (const auto& l : lam) {
      lmax = std::max(lmax, l.real());
      lmin = std::min(lmin, l.real());
    }
    if (lmin < -1e-10 * lmax) continue;
    kernels::CirculantPlan plan;
    plan.sqrt_eig.resize(static_cast<Eigen::Index>(M));
    for (std::size_t k = 0; k < M; ++k)
      plan.sqrt_eig[static_cast<Eigen::Index>(k)] =
          std::sqrt(std::max(lam[k].real(), 0.0) / static_cast<double>(M));
    plan.n_out = n;
    return plan;
  }
  throw FactorizationError("circulant embedding has negative eigenvalues");
}

// Second difference |j+1|^q + |j-1|^q - 2|j|^q, by its binomial series for
// large j where the direct form cancels.
double second_difference(double q, long j) {
  const double a = std::abs(static_cast<double>(j));
  if (a < 64.0) {
    return std::pow(a + 1.0, q) + std::pow(std::abs(a - 1.0), q) - 2.0 * std::pow(a, q);
  }
  const double x = 1.0 / a;
  double sum = 0.0;
  double coef = q * (q - 1.0) / 2.0;  // binom(q, 2)
  double xp = x * x;
  for (int k = 2; k <= 12; k += 2) {
    sum += coef * xp;
    coef *= (q - k) * (q - k - 1.0) / ((k + 1.0) * (k + 2.0));
    xp *= x * x;
  }
  return 2.0 * std::pow(a, q) * sum;
}

}  // namespace

std::string to_string(ProcessTag t) {
  switch (t) {
    case ProcessTag::fbm: return "fbm";
    case ProcessTag::rosenblatt: return "rosenblatt";
    case ProcessTag::custom: return "custom";
  }
  return "custom";
}

Ensemble::Ensemble(GridSpec g, ProcessTag t, Eigen::MatrixXd v)
    : grid(g), tag(t), values(std::move(v)) {
  if (values.rows() != static_cast<Eigen::Index>(grid.size()))
    throw PreconditionError("ensemble: value rows must match the grid");
}

Eigen::VectorXd Ensemble::increment(double s, double t) const {
  const auto i = static_cast<Eigen::Index>(grid.snap(s));
  const auto j = static_cast<Eigen::Index>(grid.snap(t));
  return (values.row(j) - values.row(i)).transpose();
}

Ensemble Ensemble::paths(std::size_t first, std::size_t count) const {
  if (first + count > n_paths()) throw PreconditionError("ensemble: path range out of bounds");
  return Ensemble(grid, tag,
                  values.middleCols(static_cast<Eigen::Index>(first),
                                    static_cast<Eigen::Index>(count)));
}

Ensemble simulate_fbm(const GridSpec& grid, double H, std::size_t n_paths, std::uint64_t seed,
                      FbmMethod method, std::uint64_t stream, std::size_t first_path) {
  if (!(H > 0.5 && H < 1.0)) throw PreconditionError("simulate_fbm: H must lie in (1/2, 1)");
  const auto n = static_cast<Eigen::Index>(grid.size());
  Eigen::MatrixXd values = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(n_paths));
  const kernels::PathStream ps{seed, stream, first_path};

  if (method == FbmMethod::circulant) {
    const std::size_t z = require_zero(grid, "simulate_fbm");
    const double scale = 0.5 * std::pow(grid.dt(), 2.0 * H);
    auto gamma = [&](long j) { return scale * second_difference(2.0 * H, j); };
    const auto plan = circulant_plan(gamma, grid.steps());
    Eigen::MatrixXd incr(static_cast<Eigen::Index>(grid.steps()), static_cast<Eigen::Index>(n_paths));
    kernels::omp::circulant_paths(plan, ps, incr);
    const auto zi = static_cast<Eigen::Index>(z);
    for (Eigen::Index i = zi + 1; i < n; ++i) values.row(i) = values.row(i - 1) + incr.row(i - 1);
    for (Eigen::Index i = zi - 1; i >= 0; --i) values.row(i) = values.row(i + 1) - incr.row(i);
    return Ensemble(grid, ProcessTag::fbm, std::move(values));
  }

  if (grid.size() > kMaxDenseGrid)
    throw PreconditionError("simulate_fbm: grid too large for dense factorization");
  std::vector<Eigen::Index> rows;
  std::vector<double> t;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid.zero_index() && i == *grid.zero_index()) continue;
    rows.push_back(static_cast<Eigen::Index>(i));
    t.push_back(grid.time(i));
  }
  const auto m = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd cov(m, m);
  const double e = 2.0 * H;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double ti = t[static_cast<std::size_t>(i)], tj = t[static_cast<std::size_t>(j)];
      cov(i, j) = cov(j, i) = 0.5 * (std::pow(std::abs(ti), e) + std::pow(std::abs(tj), e) -
                                     std::pow(std::abs(ti - tj), e));
    }
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    cov.diagonal().array() += 1e-12 * cov.trace();
    llt.compute(cov);
    if (llt.info() != Eigen::Success)
      throw FactorizationError("simulate_fbm: covariance not positive definite after jitter");
  }
  const Eigen::MatrixXd L = llt.matrixL();
  Eigen::MatrixXd sub(m, static_cast<Eigen::Index>(n_paths));
  kernels::omp::cholesky_paths(L, ps, sub);
  for (Eigen::Index i = 0; i < m; ++i) values.row(rows[static_cast<std::size_t>(i)]) = sub.row(i);
  return Ensemble(grid, ProcessTag::fbm, std::move(values));
}

RosenblattScheme RosenblattScheme::make(double H, int cells_per_unit, double disc_tol) {
  if (!(H > 0.5 && H < 1.0)) throw PreconditionError("Rosenblatt: H must lie in (1/2, 1)");
  if (cells_per_unit < 1) throw PreconditionError("Rosenblatt: cells_per_unit must be positive");
  if (!(disc_tol > 0.0)) throw PreconditionError("Rosenblatt: disc_tol must be positive");
  RosenblattScheme s;
  s.H = H;
  s.sigma = std::sqrt(H * (2.0 * H - 1.0) / 2.0);
  s.A_H = s.sigma / special::beta(H / 2.0, 1.0 - H);
  s.cells_per_unit = cells_per_unit;
  s.disc_tol = disc_tol;
  return s;
}

double RosenblattScheme::cell_cov(double h, long j) const {
  return sigma * std::pow(h, H - 1.0) * second_difference(H + 1.0, j) / (H * (H + 1.0));
}

double RosenblattScheme::interval_variance(double h, long n) const {
  double s = n * std::pow(cell_cov(h, 0), 2.0);
  for (long j = 1; j < n; ++j) s += 2.0 * static_cast<double>(n - j) * std::pow(cell_cov(h, j), 2.0);
  return 2.0 * h * h * s;
}

double RosenblattScheme::unit_variance_bias(double h) const {
  const long n = std::max(1L, std::lround(1.0 / h));
  return interval_variance(1.0 / static_cast<double>(n), n) - 1.0;
}

double RosenblattScheme::cell_width(double dt) const {
  const double s = std::max(1.0, std::ceil(dt * cells_per_unit - 1e-9));
  return dt / s;
}

Ensemble simulate_rosenblatt(const GridSpec& grid, const RosenblattScheme& scheme,
                             std::size_t n_paths, std::uint64_t seed, std::uint64_t stream,
                             std::size_t first_path) {
  const std::size_t z = require_zero(grid, "simulate_rosenblatt");
  const double h = scheme.cell_width(grid.dt());
  const double bias = scheme.unit_variance_bias(h);
  if (std::abs(bias) > scheme.disc_tol)
    throw ConfigurationError("simulate_rosenblatt: relative variance bias " + std::to_string(bias) +
                                 " over a unit interval exceeds disc_tol; raise cells_per_unit",
                             bias);
  const auto S = static_cast<std::size_t>(std::lround(grid.dt() / h));
  const std::size_t cells = grid.steps() * S;
  const auto plan = circulant_plan([&](long j) { return scheme.cell_cov(h, j); }, cells);
  const double g0 = scheme.cell_cov(h, 0);

  const auto n = static_cast<Eigen::Index>(grid.size());
  Eigen::MatrixXd values = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(n_paths));
  Eigen::MatrixXd incr(static_cast<Eigen::Index>(grid.steps()), 0);
  for (std::size_t b0 = 0; b0 < n_paths; b0 += kBatch) {
    const std::size_t nb = std::min(kBatch, n_paths - b0);
    Eigen::MatrixXd Y(static_cast<Eigen::Index>(cells), static_cast<Eigen::Index>(nb));
    kernels::omp::circulant_paths(plan, {seed, stream, first_path + b0}, Y);
    incr.resize(static_cast<Eigen::Index>(grid.steps()), static_cast<Eigen::Index>(nb));
    for (Eigen::Index p = 0; p < Y.cols(); ++p)
      for (std::size_t i = 0; i < grid.steps(); ++i) {
        double acc = 0.0;
        for (std::size_t c = i * S; c < (i + 1) * S; ++c) {
          const double y = Y(static_cast<Eigen::Index>(c), p);
          acc += y * y - g0;
        }
        incr(static_cast<Eigen::Index>(i), p) = h * acc;
      }
    auto block = values.middleCols(static_cast<Eigen::Index>(b0), static_cast<Eigen::Index>(nb));
    const auto zi = static_cast<Eigen::Index>(z);
    for (Eigen::Index i = zi + 1; i < n; ++i) block.row(i) = block.row(i - 1) + incr.row(i - 1);
    for (Eigen::Index i = zi - 1; i >= 0; --i) block.row(i) = block.row(i + 1) - incr.row(i);
  }
  return Ensemble(grid, ProcessTag::rosenblatt, std::move(values));
}

std::vector<double> rosenblatt_step_cov(const RosenblattScheme& scheme, double dt,
                                        std::size_t max_lag) {
  const double h = scheme.cell_width(dt);
  const long S = std::lround(dt / h);
  std::vector<double> cov(max_lag + 1, 0.0);
  for (std::size_t L = 0; L <= max_lag; ++L) {
    double s = 0.0;
    for (long d = -(S - 1); d <= S - 1; ++d) {
      const double g = scheme.cell_cov(h, static_cast<long>(L) * S + d);
      s += static_cast<double>(S - std::labs(d)) * g * g;
    }
    cov[L] = 2.0 * h * h * s;
  }
  return cov;
}

double rosenblatt_scheme_cumulant(const RosenblattScheme& scheme, double h, long n_cells, int k) {
  if (k < 2) throw PreconditionError("cumulant order must be at least 2");
  if (n_cells < 1) throw PreconditionError("need at least one cell");
  Eigen::MatrixXd G(n_cells, n_cells);
  for (long i = 0; i < n_cells; ++i)
    for (long j = 0; j < n_cells; ++j) G(i, j) = h * scheme.cell_cov(h, i - j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
  const double tr = es.eigenvalues().array().pow(k).sum();
  return std::pow(2.0, k - 1) * std::tgamma(static_cast<double>(k)) * tr;
}

MultiTestReport check_increment_stationarity(const Ensemble& e,
                                             const std::vector<std::pair<double, double>>& intervals,
                                             const std::vector<double>& shifts,
                                             const EnergyOptions& opt, Pairing pairing) {
  if (intervals.empty()) throw PreconditionError("stationarity: no intervals");
  const std::size_t n = e.n_paths();
  const std::size_t half = pairing == Pairing::disjoint ? n / 2 : n;
  const std::size_t b_first = pairing == Pairing::disjoint ? half : 0;
  auto vectors = [&](double h, std::size_t first, std::size_t count) {
    Samples X(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(intervals.size()));
    for (std::size_t j = 0; j < intervals.size(); ++j) {
      const Eigen::VectorXd d = e.increment(intervals[j].first + h, intervals[j].second + h);
      X.col(static_cast<Eigen::Index>(j)) =
          d.segment(static_cast<Eigen::Index>(first), static_cast<Eigen::Index>(count));
    }
    return X;
  };
  std::vector<TwoSampleReport> tests;
  const Samples A = vectors(0.0, 0, half);
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    EnergyOptions o = opt;
    o.seed = opt.seed + k;
    auto r = energy_two_sample(A, vectors(shifts[k], b_first, half), o);
    r.name = "shift " + std::to_string(shifts[k]);
    tests.push_back(r);
  }
  return bonferroni(std::move(tests), opt.level);
}

TwoSampleReport check_increment_reflexivity(const Ensemble& e,
                                            const std::vector<std::pair<double, double>>& intervals,
                                            const EnergyOptions& opt) {
  if (intervals.empty()) throw PreconditionError("reflexivity: no intervals");
  const std::size_t half = e.n_paths() / 2;
  Samples A(static_cast<Eigen::Index>(half), static_cast<Eigen::Index>(intervals.size()));
  Samples B(static_cast<Eigen::Index>(half), static_cast<Eigen::Index>(intervals.size()));
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    const auto [s, t] = intervals[j];
    A.col(static_cast<Eigen::Index>(j)) = e.increment(s, t).head(static_cast<Eigen::Index>(half));
    B.col(static_cast<Eigen::Index>(j)) =
        e.increment(-t, -s).segment(static_cast<Eigen::Index>(half), static_cast<Eigen::Index>(half));
  }
  auto r = energy_two_sample(A, B, opt);
  r.name = "reflexivity";
  return r;
}

}  // namespace volterra
