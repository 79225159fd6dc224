#include "volterra/spde.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "volterra/error.h"
#include "volterra/kernel.h"
#include "volterra/kernels.h"
#include "volterra/quadrature.h"
#include "volterra/rng.h"

namespace volterra {

namespace {

// Weight of a grid-step increment in the cell-averaged convolution:
// (1 - e^{-lambda dt}) / (lambda dt).
double step_weight(double lambda, double dt) {
  const double x = lambda * dt;
  return x == 0.0 ? 1.0 : -std::expm1(-x) / x;
}

// int_a^b hs(r)^p dr, split geometrically towards a.
double hs_power_integral(const std::function<double(double)>& hs, double p, double a, double b) {
  auto f = [&](double r) { return std::pow(std::max(hs(r), 0.0), p); };
  std::vector<double> cuts;
  for (double c = a + (b - a) * 0.25; c > a && cuts.size() < 16; c = a + (c - a) * 0.25)
    cuts.push_back(c);
  auto rule = [&](double lo, double hi) { return quad::endpoint(f, lo, hi, 1e-12); };
  return quad::split_sum(a, b, cuts, rule).value;
}

// int_0^r int_0^s e^{-la (r-u)} e^{-lb (s-v)} phi(u, v) du dv.
double exp_pair_integral(const FbmKernel& k, double la, double r, double lb, double s) {
  if (r <= 0.0 || s <= 0.0) return 0.0;
  auto f = [&](double u) { return std::exp(-la * (r - u)); };
  auto g = [&](double v) { return std::exp(-lb * (s - v)); };
  return phi_weighted_integral(k, f, 0.0, r, g, 0.0, s);
}

// Covariance entries (Phi Phi*)_ij I(lambda_i, lambda_j), one quadrature per pair.
Eigen::MatrixXd pair_matrix(const EquationSpec& spec,
                            const std::function<double(double, double)>& I) {
  const auto n = static_cast<Eigen::Index>(spec.dim());
  const Eigen::MatrixXd PP = spec.Phi * spec.Phi.transpose();
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (PP(i, j) != 0.0) pairs.emplace_back(i, j);
  std::vector<double> vals(pairs.size(), 0.0);
  std::vector<std::string> errors(pairs.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, kernels::workers()))
  for (std::size_t q = 0; q < pairs.size(); ++q) {
    try {
      const auto [i, j] = pairs[q];
      vals[q] = PP(i, j) * I(spec.lambda[i], spec.lambda[j]);
    } catch (const std::exception& e) {
      errors[q] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw QuadratureError("covariance quadrature failed: " + e, 0.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t q = 0; q < pairs.size(); ++q) m(pairs[q].first, pairs[q].second) = vals[q];
  return m;
}

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

// Steps of the noise components on `grid`, combined per coordinate through Phi.
std::vector<Eigen::MatrixXd> noise_increments(const NoiseSpec& noise, const GridSpec& grid,
                                              std::size_t n_paths, std::uint64_t seed) {
  std::vector<Eigen::MatrixXd> out;
  for (std::size_t k = 0; k < noise.size(); ++k) {
    const std::uint64_t stream = stream_id(Stream::noise, k);
    Ensemble e = noise.families[k] == NoiseFamily::fbm
                     ? simulate_fbm(grid, noise.H, n_paths, seed, noise.fbm_method, stream)
                     : simulate_rosenblatt(grid,
                                           RosenblattScheme::make(noise.H, noise.cells_per_unit,
                                                                  noise.disc_tol),
                                           n_paths, seed, stream);
    const auto s = static_cast<Eigen::Index>(grid.steps());
    out.push_back(e.values.bottomRows(s) - e.values.topRows(s));
  }
  return out;
}

// U_n on `grid` for every coordinate, starting from 0 at grid.t_min().
std::vector<Eigen::MatrixXd> filtered_noise(const EquationSpec& spec, const GridSpec& grid,
                                            std::size_t n_paths, std::uint64_t seed) {
  const auto incr = noise_increments(spec.noise, grid, n_paths, seed);
  std::vector<Eigen::MatrixXd> out;
  const double dt = grid.dt();
  for (std::size_t n = 0; n < spec.dim(); ++n) {
    const auto ni = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd mixed = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(grid.steps()),
                                                  static_cast<Eigen::Index>(n_paths));
    for (std::size_t k = 0; k < incr.size(); ++k) {
      const double c = spec.Phi(ni, static_cast<Eigen::Index>(k));
      if (c != 0.0) mixed += c * incr[k];
    }
    const double lam = spec.lambda[ni];
    Eigen::MatrixXd u;
    kernels::omp::ou_filter(mixed, std::exp(-lam * dt), step_weight(lam, dt), u);
    out.push_back(std::move(u));
  }
  return out;
}

GridSpec extend_back(const GridSpec& grid, double T) {
  const double dt = grid.dt();
  const auto k = static_cast<std::size_t>(std::ceil(T / dt - 1e-9));
  return GridSpec(-static_cast<double>(k) * dt, grid.t_max(), grid.size() + k);
}

void require_condition(const CheckResult& c, const char* who) {
  if (!c.pass) throw ConditionError(std::string(who) + ": " + c.message);
}

}  // namespace

std::string to_string(NoiseFamily f) { return f == NoiseFamily::fbm ? "fbm" : "rosenblatt"; }

NoiseFamily noise_family_from_string(const std::string& s) {
  if (s == "fbm") return NoiseFamily::fbm;
  if (s == "rosenblatt") return NoiseFamily::rosenblatt;
  throw PreconditionError("unknown noise family '" + s + "'");
}

std::string to_string(InitialKind k) {
  switch (k) {
    case InitialKind::deterministic:
      return "deterministic";
    case InitialKind::ensemble:
      return "ensemble";
    case InitialKind::x_infinity:
      return "x-infinity";
  }
  return "?";
}

void EquationSpec::validate() const {
  if (lambda.size() == 0) throw PreconditionError("equation: empty state space");
  if (!lambda.allFinite()) throw PreconditionError("equation: non-finite lambda");
  if (Phi.rows() != lambda.size())
    throw PreconditionError("equation: Phi must have one row per mode");
  if (static_cast<std::size_t>(Phi.cols()) != noise.size())
    throw PreconditionError("equation: Phi must have one column per noise component");
  if (!Phi.allFinite()) throw PreconditionError("equation: non-finite Phi");
  if (!(noise.H > 0.5 && noise.H < 1.0)) throw PreconditionError("equation: H must lie in (1/2, 1)");
  if (!noise.independent)
    throw PreconditionError("equation: only independent noise components are supported");
  if (x0.kind == InitialKind::deterministic && x0.x.size() != 0 && x0.x.size() != lambda.size())
    throw PreconditionError("equation: x0 must have one entry per mode");
  if (x0.kind == InitialKind::ensemble && x0.samples.cols() != lambda.size())
    throw PreconditionError("equation: x0 samples must have one column per mode");
  if (x0.kind == InitialKind::x_infinity && !(x0.T_trunc > 0.0))
    throw PreconditionError("equation: T_trunc must be positive");
}

std::vector<double> EquationSpec::mode_weights() const {
  std::vector<double> w(dim());
  for (std::size_t n = 0; n < dim(); ++n) w[n] = Phi.row(static_cast<Eigen::Index>(n)).squaredNorm();
  return w;
}

Samples VectorEnsemble::at(double t) const {
  const auto i = static_cast<Eigen::Index>(grid.snap(t));
  Samples s(static_cast<Eigen::Index>(n_paths()), static_cast<Eigen::Index>(coords.size()));
  for (std::size_t n = 0; n < coords.size(); ++n)
    s.col(static_cast<Eigen::Index>(n)) = coords[n].row(i).transpose();
  return s;
}

CheckResult check_H(const std::vector<double>& lambda, const std::vector<double>& weights,
                    double alpha, double T0) {
  if (!(T0 > 0.0)) throw PreconditionError("check_H: T0 must be positive");
  if (lambda.size() != weights.size()) throw PreconditionError("check_H: size mismatch");
  return check_H([&](double r) { return kernels::omp::exp_weighted_sum(lambda, weights, r); },
                 alpha, T0);
}

CheckResult check_H(const std::function<double(double)>& hs_norm_sq, double alpha, double T0) {
  if (!(T0 > 0.0)) throw PreconditionError("check_H: T0 must be positive");
  CheckResult r;
  const double p = 1.0 / (1.0 + 2.0 * alpha);
  r.value = hs_power_integral(hs_norm_sq, p, 0.0, T0);
  r.pass = std::isfinite(r.value);
  std::ostringstream os;
  os << "int_0^" << T0 << " ||S(r)Phi||_HS^" << 2.0 * p << " dr = " << r.value;
  r.message = os.str();
  return r;
}

CheckResult check_H(const EquationSpec& spec, double T0) {
  spec.validate();
  return check_H(to_vector(spec.lambda), spec.mode_weights(), spec.noise.alpha(), T0);
}

CheckResult check_limit_condition(const std::vector<double>& lambda,
                                  const std::vector<double>& weights, double alpha) {
  if (lambda.size() != weights.size()) throw PreconditionError("limit condition: size mismatch");
  CheckResult r;
  std::vector<double> lam, w;
  double lmin = INFINITY;
  for (std::size_t n = 0; n < lambda.size(); ++n) {
    if (weights[n] == 0.0) continue;
    if (!(lambda[n] > 0.0)) {
      r.value = INFINITY;
      r.error = INFINITY;
      r.message = "mode " + std::to_string(n) + " carries noise with lambda <= 0; integrand does not decay";
      return r;
    }
    lam.push_back(lambda[n]);
    w.push_back(weights[n]);
    lmin = std::min(lmin, lambda[n]);
  }
  if (lam.empty()) {
    r.pass = true;
    r.message = "Phi = 0";
    return r;
  }
  const double p = 1.0 / (1.0 + 2.0 * alpha);
  // (sum w e^{-2 lambda r})^p <= sum w^p e^{-2 p lambda r} since p < 1
  auto tail = [&](double T) {
    double s = 0.0;
    for (std::size_t n = 0; n < lam.size(); ++n)
      s += std::pow(w[n], p) * std::exp(-2.0 * p * lam[n] * T) / (2.0 * p * lam[n]);
    return s;
  };
  auto hs = [&](double r) { return kernels::omp::exp_weighted_sum(lam, w, r); };
  double T = 1.0 / lmin;
  double head = hs_power_integral(hs, p, 0.0, T);
  while (tail(T) > 1e-10 * head) {
    head += hs_power_integral(hs, p, T, 2.0 * T);
    T *= 2.0;
  }
  r.value = head;
  r.error = tail(T);
  r.pass = std::isfinite(head);
  std::ostringstream os;
  os << "int_0^inf ||S(r)Phi||_HS^" << 2.0 * p << " dr = " << head << " (head to " << T
     << ", tail <= " << r.error << ")";
  r.message = os.str();
  return r;
}

CheckResult check_limit_condition(const EquationSpec& spec) {
  spec.validate();
  return check_limit_condition(to_vector(spec.lambda), spec.mode_weights(), spec.noise.alpha());
}

VectorEnsemble solve_mild(const EquationSpec& spec, const GridSpec& grid, std::size_t n_paths,
                          std::uint64_t seed, double T0) {
  spec.validate();
  if (grid.t_min() != 0.0) throw PreconditionError("solve_mild: grid must start at t = 0");
  require_condition(check_H(spec, T0), "solve_mild: Hypothesis (H) fails");
  if (spec.x0.kind == InitialKind::ensemble &&
      static_cast<std::size_t>(spec.x0.samples.rows()) != n_paths)
    throw PreconditionError("solve_mild: x0 ensemble must have one row per path");

  const bool stationary = spec.x0.kind == InitialKind::x_infinity;
  if (stationary) require_condition(check_limit_condition(spec), "solve_mild: no limiting measure");
  const GridSpec ext = stationary ? extend_back(grid, spec.x0.T_trunc) : grid;
  auto U = filtered_noise(spec, ext, n_paths, seed);

  VectorEnsemble out{grid, {}};
  const auto rows = static_cast<Eigen::Index>(grid.size());
  for (std::size_t n = 0; n < spec.dim(); ++n) {
    Eigen::MatrixXd X = U[n].bottomRows(rows);
    const auto ni = static_cast<Eigen::Index>(n);
    if (spec.x0.kind == InitialKind::deterministic && spec.x0.x.size() != 0) {
      for (Eigen::Index i = 0; i < rows; ++i)
        X.row(i).array() += std::exp(-spec.lambda[ni] * grid.time(static_cast<std::size_t>(i))) *
                            spec.x0.x[ni];
    } else if (spec.x0.kind == InitialKind::ensemble) {
      for (Eigen::Index i = 0; i < rows; ++i)
        X.row(i) += std::exp(-spec.lambda[ni] * grid.time(static_cast<std::size_t>(i))) *
                    spec.x0.samples.col(ni).transpose();
    }
    out.coords.push_back(std::move(X));
  }
  return out;
}

CovMatrix covariance_g(const EquationSpec& spec, double r, double s) {
  spec.validate();
  if (!(r >= 0.0 && s >= 0.0)) throw PreconditionError("covariance_g: need r, s >= 0");
  const FbmKernel k(spec.noise.H);
  CovMatrix c;
  c.t = r;
  c.m = pair_matrix(spec, [&](double la, double lb) { return exp_pair_integral(k, la, r, lb, s); });
  return c;
}

CovMatrix covariance_qt(const EquationSpec& spec, double t) {
  if (!(t >= 0.0)) throw PreconditionError("covariance_qt: need t >= 0");
  CovMatrix c = covariance_g(spec, t, t);
  c.m = 0.5 * (c.m + c.m.transpose());
  c.t = t;
  return c;
}

CovMatrix covariance_q_infinity(const EquationSpec& spec) {
  spec.validate();
  const auto w = spec.mode_weights();
  double lmin = INFINITY;
  for (std::size_t n = 0; n < w.size(); ++n)
    if (w[n] != 0.0) {
      if (!(spec.lambda[static_cast<Eigen::Index>(n)] > 0.0))
        throw ConditionError("q_infinity: a mode with lambda <= 0 carries noise");
      lmin = std::min(lmin, spec.lambda[static_cast<Eigen::Index>(n)]);
    }
  if (!std::isfinite(lmin)) return {Eigen::MatrixXd::Zero(spec.Phi.rows(), spec.Phi.rows()), INFINITY};
  // q_inf - q_T is the covariance of int_{-inf}^{-T} plus cross terms, all O(e^{-lambda_min T})
  const double T = std::log(1e10) / lmin;
  CovMatrix c = covariance_qt(spec, T);
  c.t = INFINITY;
  return c;
}

CovMatrix covariance_q_infinity_closed(const EquationSpec& spec) {
  spec.validate();
  const double H = spec.noise.H;
  const double c0 = H * std::tgamma(2.0 * H);
  CovMatrix c;
  c.t = INFINITY;
  c.m = pair_matrix(spec, [&](double la, double lb) {
    if (!(la > 0.0 && lb > 0.0)) throw ConditionError("q_infinity: a mode with lambda <= 0 carries noise");
    return c0 * (std::pow(la, 1.0 - 2.0 * H) + std::pow(lb, 1.0 - 2.0 * H)) / (la + lb);
  });
  return c;
}

CovMatrix covariance_g_discrete(const EquationSpec& spec, const GridSpec& grid, double r,
                                double s) {
  spec.validate();
  const std::size_t nr = grid.snap(r), ns = grid.snap(s);  // steps from grid.t_min()
  const std::size_t ir = nr, is = ns;
  const double dt = grid.dt();
  const std::size_t max_lag = std::max(nr, ns);

  std::vector<std::vector<double>> step_cov;
  for (std::size_t k = 0; k < spec.noise.size(); ++k) {
    if (spec.noise.families[k] == NoiseFamily::fbm) {
      std::vector<double> c(max_lag + 1);
      const double e = 2.0 * spec.noise.H;
      for (std::size_t j = 0; j <= max_lag; ++j) {
        const double x = static_cast<double>(j);
        c[j] = 0.5 * std::pow(dt, e) *
               (std::pow(x + 1.0, e) + std::pow(std::abs(x - 1.0), e) - 2.0 * std::pow(x, e));
      }
      step_cov.push_back(std::move(c));
    } else {
      const auto sch =
          RosenblattScheme::make(spec.noise.H, spec.noise.cells_per_unit, spec.noise.disc_tol);
      step_cov.push_back(rosenblatt_step_cov(sch, dt, max_lag));
    }
  }

  const auto N = static_cast<Eigen::Index>(spec.dim());
  CovMatrix out;
  out.t = r;
  out.m = Eigen::MatrixXd::Zero(N, N);
  auto weights = [&](double lam, std::size_t n_steps, double t_end) {
    std::vector<double> w(n_steps);
    const double sw = step_weight(lam, dt);
    for (std::size_t c = 0; c < n_steps; ++c)
      w[c] = sw * std::exp(-lam * (t_end - grid.time(c + 1)));
    return w;
  };
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) {
      const auto wi = weights(spec.lambda[i], nr, grid.time(ir));
      const auto wj = weights(spec.lambda[j], ns, grid.time(is));
      double acc = 0.0;
      for (std::size_t k = 0; k < spec.noise.size(); ++k) {
        const double c = spec.Phi(i, static_cast<Eigen::Index>(k)) * spec.Phi(j, static_cast<Eigen::Index>(k));
        if (c == 0.0) continue;
        double s2 = 0.0;
        for (std::size_t a = 0; a < nr; ++a)
          for (std::size_t b = 0; b < ns; ++b)
            s2 += wi[a] * wj[b] * step_cov[k][a > b ? a - b : b - a];
        acc += c * s2;
      }
      out.m(i, j) = acc;
    }
  return out;
}

double mean_square_increment(const EquationSpec& spec, double s, double t) {
  spec.validate();
  if (!(0.0 <= s && s <= t)) throw PreconditionError("mean_square_increment: need 0 <= s <= t");
  if (s == t) return 0.0;
  const FbmKernel k(spec.noise.H);
  const auto w = spec.mode_weights();
  double total = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n) {
    if (w[n] == 0.0) continue;
    const double lam = spec.lambda[static_cast<Eigen::Index>(n)];
    // Z_t - Z_s = A int_0^s e^{-lam(s-u)} dB + int_s^t e^{-lam(t-u)} dB, A = e^{-lam(t-s)} - 1
    const double A = std::expm1(-lam * (t - s));
    auto g = [&](double u) { return std::exp(-lam * (s - u)); };
    auto h = [&](double u) { return std::exp(-lam * (t - u)); };
    double v = phi_weighted_integral(k, h, s, t, h, s, t);
    if (s > 0.0) {
      v += A * A * phi_weighted_integral(k, g, 0.0, s, g, 0.0, s);
      v += 2.0 * A * phi_weighted_integral(k, g, 0.0, s, h, s, t);
    }
    total += w[n] * v;
  }
  return total;
}

XInfinitySample sample_x_infinity(const EquationSpec& spec, double T_trunc, double dt,
                                  std::size_t n_paths, std::uint64_t seed) {
  spec.validate();
  if (!(T_trunc > 0.0 && dt > 0.0)) throw PreconditionError("sample_x_infinity: need T_trunc, dt > 0");
  const CheckResult lim = check_limit_condition(spec);
  require_condition(lim, "sample_x_infinity: no limiting measure");
  const auto k = static_cast<std::size_t>(std::ceil(T_trunc / dt - 1e-9));
  const GridSpec grid(-static_cast<double>(k) * dt, 0.0, k + 1);
  const auto U = filtered_noise(spec, grid, n_paths, seed);

  XInfinitySample out;
  const auto N = static_cast<Eigen::Index>(spec.dim());
  out.x.resize(static_cast<Eigen::Index>(n_paths), N);
  for (Eigen::Index n = 0; n < N; ++n) out.x.col(n) = U[static_cast<std::size_t>(n)].bottomRows(1).transpose();

  const double T = static_cast<double>(k) * dt;
  const double p = 1.0 / (1.0 + 2.0 * spec.noise.alpha());
  const auto w = spec.mode_weights();
  if (lim.value > 0.0) {
    const Eigen::MatrixXd q = covariance_q_infinity_closed(spec).m;
    for (Eigen::Index n = 0; n < N; ++n) {
      const double l = spec.lambda[n];
      if (w[static_cast<std::size_t>(n)] == 0.0) continue;
      out.truncation_ms += std::exp(-2.0 * l * T) * q(n, n);
      out.tail_bound += std::pow(w[static_cast<std::size_t>(n)], p) * std::exp(-2.0 * p * l * T) / (2.0 * p * l);
    }
  }
  return out;
}

}  // namespace volterra
