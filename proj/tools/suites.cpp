#include "suites.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "volterra/criteria.h"
#include "volterra/error.h"
#include "volterra/kernel.h"
#include "volterra/process.h"
#include "volterra/rng.h"
#include "volterra/spde.h"
#include "volterra/stochastic_integral.h"

namespace volterra::app {

namespace {

struct MeanErr {
  double mean = 0.0;
  double stderr_ = 0.0;
};

MeanErr mean_err(const Eigen::ArrayXd& x) {
  const double n = static_cast<double>(x.size());
  MeanErr m;
  m.mean = x.mean();
  m.stderr_ = std::sqrt((x - m.mean).square().sum() / (n - 1.0) / n);
  return m;
}

std::string fmt(double x, int prec = 6) {
  std::ostringstream os;
  os << std::setprecision(prec) << x;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double fbm_cov(double s, double t, double H) {
  const double e = 2.0 * H;
  return 0.5 * (std::pow(std::abs(s), e) + std::pow(std::abs(t), e) - std::pow(std::abs(t - s), e));
}

Ensemble simulate(const std::string& family, const GridSpec& g, double H, std::size_t paths,
                  std::uint64_t seed) {
  if (family == "fbm") return simulate_fbm(g, H, paths, seed);
  if (family == "rosenblatt") return simulate_rosenblatt(g, RosenblattScheme::make(H), paths, seed);
  throw PreconditionError("unknown family '" + family + "'");
}

// Four modes with decay rates 1/4 .. 2 and a coupling between noise components.
EquationSpec four_mode_spec() {
  EquationSpec s;
  s.lambda.resize(4);
  s.lambda << 0.25, 0.5, 1.0, 2.0;
  s.Phi.resize(4, 3);
  s.Phi << 1.0, 0.0, 0.3,
           0.5, 0.8, 0.0,
           0.0, -0.6, 1.0,
           0.2, 0.0, 0.7;
  s.noise.H = 0.75;
  s.noise.families.assign(3, NoiseFamily::fbm);
  return s;
}

// Exact covariance of grid values of the Rosenblatt scheme.
double scheme_cov(const std::vector<double>& step_cov, const GridSpec& g, double s, double t) {
  const auto z = static_cast<long>(*g.zero_index());
  auto range = [&](double x, long& lo, long& hi, double& sign) {
    const auto i = static_cast<long>(g.snap(x));
    lo = std::min(i, z);
    hi = std::max(i, z);
    sign = i >= z ? 1.0 : -1.0;
  };
  long a0, a1, b0, b1;
  double sa, sb;
  range(s, a0, a1, sa);
  range(t, b0, b1, sb);
  double acc = 0.0;
  for (long a = a0; a < a1; ++a)
    for (long b = b0; b < b1; ++b) acc += step_cov[static_cast<std::size_t>(std::labs(a - b))];
  return sa * sb * acc;
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string summary(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << "\n";
    for (const auto& d : c.details) os << "      " << d << "\n";
  }
  return os.str();
}

Check kernel_closed_form(const std::vector<double>& Hs, int pairs, double rel_tol, std::uint64_t seed) {
  Check c{"phi quadrature vs closed form", true, {}};
  const auto t0 = std::chrono::steady_clock::now();
  for (double H : Hs) {
    const FbmKernel k(H);
    auto eng = make_engine(seed, stream_id(Stream::fbm, 100), static_cast<std::uint64_t>(H * 1e6));
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    double worst = 0.0;
    for (int i = 0; i < pairs; ++i) {
      double u = U(eng), v = U(eng);
      while (std::abs(u - v) < 1e-3) v = U(eng);
      const double q = phi_quadrature(k, u, v);
      const double e = H * (2.0 * H - 1.0) * std::pow(std::abs(u - v), 2.0 * H - 2.0);
      worst = std::max(worst, std::abs(q - e) / e);
    }
    c.pass = c.pass && worst <= rel_tol;
    c.details.push_back("H=" + fmt(H) + ": " + std::to_string(pairs) + " pairs, max rel err " +
                        fmt(worst, 3) + " (tol " + fmt(rel_tol) + ")");
  }
  c.details.push_back("time " + fmt(seconds_since(t0), 3) + " s");
  return c;
}

Check kernel_bounds(double H) {
  Check c{"kernel regularity and increment bound", true, {}};
  const FbmKernel k(H);
  std::vector<GridPoint> grid;
  for (double u : {-2.0, 0.0, 0.5, 3.0})
    for (double lag : {1e-6, 1e-3, 0.1, 1.0, 10.0}) grid.push_back({u, u - lag});
  const auto reg = check_regularity(k, grid);
  c.pass = reg.pass;
  c.details.push_back("max |dK/du| (u-r)^(1-alpha) = " + fmt(reg.max_ratio, 10) + " <= " +
                      fmt(reg.bound, 10));
  const double C = increment_bound_const(k);
  auto opaque = opaque_fbm_kernel(H);
  for (auto [s, t] : {std::pair{0.0, 0.5}, std::pair{-1.0, 1.0}}) {
    const double m = cov_R_phi(*opaque, s, t, s, t);
    const double bound = C * std::pow(t - s, 2.0 * H);
    const bool ok = m <= bound * (1.0 + 1e-6);
    c.pass = c.pass && ok;
    c.details.push_back("E|b_t-b_s|^2 on [" + fmt(s) + "," + fmt(t) + "] = " + fmt(m, 10) +
                        " <= C|t-s|^(1+2alpha) = " + fmt(bound, 10));
  }
  return c;
}

Check fbm_normalization(const std::vector<double>& Hs, std::size_t paths, std::uint64_t seed) {
  Check c{"fBm normalization E(W_1)^2 = 1", true, {}};
  const GridSpec g(-1.0, 1.0, 41);
  for (double H : Hs) {
    const Ensemble e = simulate_fbm(g, H, paths, seed);
    const Eigen::ArrayXd w1 = e.values.row(static_cast<Eigen::Index>(g.snap(1.0))).transpose().array();
    const auto m = mean_err(w1.square());
    const bool mc_ok = std::abs(m.mean - 1.0) <= 3.0 * m.stderr_;
    const FbmKernel k(H);
    const double kernel_norm = cov_R_direct(k, 0.0, 1.0, 0.0, 1.0);
    const bool k_ok = std::abs(kernel_norm - 1.0) <= 1e-6;
    c.pass = c.pass && mc_ok && k_ok;
    c.details.push_back("H=" + fmt(H) + ": MC Var W_1 = " + fmt(m.mean) + " +- " + fmt(m.stderr_, 3) +
                        " (" + std::to_string(paths) + " paths); int (K(1,r)-K(0,r))^2 dr = " +
                        fmt(kernel_norm, 12));
  }
  return c;
}

Check rosenblatt_moments(double H, std::size_t paths, std::uint64_t seed) {
  Check c{"Rosenblatt variance, covariance and third cumulant", true, {}};
  const auto t0 = std::chrono::steady_clock::now();
  const RosenblattScheme sch = RosenblattScheme::make(H);
  const GridSpec g(-1.0, 2.0, 49);
  const Ensemble e = simulate_rosenblatt(g, sch, paths, seed);
  const auto step_cov = rosenblatt_step_cov(sch, g.dt(), g.steps());
  auto at = [&](double t) {
    return Eigen::ArrayXd(e.values.row(static_cast<Eigen::Index>(g.snap(t))).transpose());
  };

  const std::vector<std::pair<double, double>> pairs{
      {1.0, 1.0},    {-1.0, 1.0}, {-0.5, 0.5}, {0.25, 1.0}, {0.5, 2.0},  {1.0, 2.0},
      {-1.0, -0.5},  {0.125, 0.375}, {-0.75, 1.5}, {1.5, 2.0}, {-1.0, 2.0}};
  for (auto [s, t] : pairs) {
    const auto m = mean_err(at(s) * at(t));
    const double exact = fbm_cov(s, t, H);
    const double disc = scheme_cov(step_cov, g, s, t);
    const double tol = 3.0 * m.stderr_ + std::abs(disc - exact);
    const bool ok = std::abs(m.mean - exact) <= tol;
    c.pass = c.pass && ok;
    c.details.push_back(std::string(ok ? "ok  " : "BAD ") + "E R_" + fmt(s) + " R_" + fmt(t) +
                        " = " + fmt(m.mean) + " vs " + fmt(exact) + " (3 se " +
                        fmt(3.0 * m.stderr_, 3) + " + scheme bias " + fmt(disc - exact, 3) + ")");
  }

  const Eigen::ArrayXd r1 = at(1.0);
  const double n = static_cast<double>(r1.size());
  const Eigen::ArrayXd d = r1 - r1.mean();
  const double m2 = d.square().mean(), m3 = d.cube().mean(), m4 = d.pow(4).mean(), m6 = d.pow(6).mean();
  const double k3_hat = m3 * n * n / ((n - 1.0) * (n - 2.0));
  const double k3_se = std::sqrt(std::max(0.0, m6 - m3 * m3 - 6.0 * m4 * m2 + 9.0 * m2 * m2 * m2) / n);
  CumulantSpec cs;
  cs.intervals = {{0.0, 1.0}};
  cs.thetas = {1.0};
  cs.order = 3;
  const double k3 = rosenblatt_cumulant(cs, H);
  const double h = sch.cell_width(g.dt());
  const double k3_scheme = rosenblatt_scheme_cumulant(sch, h, std::lround(1.0 / h), 3);
  const bool ok = std::abs(k3_hat - k3) <= 3.0 * k3_se + std::abs(k3_scheme - k3);
  c.pass = c.pass && ok;
  c.details.push_back(std::string(ok ? "ok  " : "BAD ") + "kappa_3(R_1): empirical " + fmt(k3_hat) +
                      " +- " + fmt(k3_se, 3) + ", quadrature " + fmt(k3) + ", scheme " + fmt(k3_scheme));
  c.details.push_back("cell width 1/" + std::to_string(std::lround(1.0 / h)) + ", unit variance bias " +
                      fmt(sch.unit_variance_bias(h), 3) + ", " + std::to_string(paths) +
                      " paths, time " + fmt(seconds_since(t0), 3) + " s");
  return c;
}

Check isometry(double H, int n_functions, std::size_t paths, std::uint64_t seed) {
  Check c{"isometry Var i(f) = D-norm", true, {}};
  const GridSpec g(-2.0, 2.0, 401);
  const Ensemble e = simulate_fbm(g, H, paths, seed);
  const FbmKernel k(H);
  auto eng = make_engine(seed, stream_id(Stream::fbm, 200), 0);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  std::uniform_int_distribution<int> pieces(1, 4);
  std::normal_distribution<double> N01;
  int worst_i = -1;
  double worst_z = 0.0;
  for (int i = 0; i < n_functions; ++i) {
    const int np = pieces(eng);
    std::vector<std::size_t> idx;
    while (idx.size() < static_cast<std::size_t>(np + 1)) {
      const std::size_t j = pick(eng);
      if (std::find(idx.begin(), idx.end(), j) == idx.end()) idx.push_back(j);
    }
    std::sort(idx.begin(), idx.end());
    std::vector<double> bp;
    for (auto j : idx) bp.push_back(g.time(j));
    const Eigen::Index dim = 1 + i % 2;
    std::vector<Eigen::VectorXd> vals;
    for (int p = 0; p < np; ++p) {
      Eigen::VectorXd v(dim);
      for (Eigen::Index q = 0; q < dim; ++q) v[q] = N01(eng);
      vals.push_back(v);
    }
    const StepFunction f(bp, vals);
    const DNorm dn = d_norm(k, f);
    const Eigen::MatrixXd I = integrate_step(f, e);
    const auto m = mean_err(I.rowwise().squaredNorm().array());
    const double z = (m.mean - dn.value) / m.stderr_;
    if (std::abs(z) > std::abs(worst_z)) {
      worst_z = z;
      worst_i = i;
    }
    const bool ok = std::abs(z) <= 3.0;
    c.pass = c.pass && ok;
    if (!ok || i < 3)
      c.details.push_back(std::string(ok ? "ok  " : "BAD ") + "f" + std::to_string(i) + " (" +
                          std::to_string(np) + " pieces, dim " + std::to_string(dim) + "): MC " +
                          fmt(m.mean) + " +- " + fmt(m.stderr_, 3) + ", D-norm " + fmt(dn.value) +
                          " (K* route " + fmt(dn.via_kstar) + ")");
  }
  c.details.push_back(std::to_string(n_functions) + " functions, " + std::to_string(paths) +
                      " paths, worst z = " + fmt(worst_z, 3) + " at f" + std::to_string(worst_i));
  return c;
}

Check law_symmetries(const std::string& family, double H, std::size_t paths, std::uint64_t seed) {
  Check c{"law symmetries of the integrals (" + family + ")", true, {}};
  const double t = 1.0;
  const GridSpec g(-t, t, 129);
  const Ensemble e = simulate(family, g, H, paths, seed);
  const std::vector<std::pair<std::string, IntegrandFn>> fs{
      {"1 + r^2", IntegrandFn::scalar([](double r) { return 1.0 + r * r; })},
      {"(cos 3r, e^-r)", IntegrandFn{[](double r) {
                                       Eigen::VectorXd v(2);
                                       v << std::cos(3.0 * r), std::exp(-r);
                                       return v;
                                     },
                                     2}}};
  EnergyOptions opt;
  opt.seed = seed;
  for (const auto& [name, f] : fs) {
    const auto rep = check_law_symmetries(f, t, e, opt);
    c.pass = c.pass && rep.tests.pass;
    for (const auto& r : rep.tests.tests) c.details.push_back("f = " + name + ": " + summary(r));
  }
  return c;
}

Check increment_laws(const std::string& family, double H, std::size_t paths, std::uint64_t seed) {
  Check c{"stationary and reflexive increments (" + family + ")", true, {}};
  const GridSpec g(-2.0, 2.0, 129);
  const Ensemble e = simulate(family, g, H, paths, seed);
  EnergyOptions opt;
  opt.seed = seed;
  const std::vector<std::pair<double, double>> iv{{0.0, 0.5}, {0.25, 1.0}};
  const auto st = check_increment_stationarity(e, iv, {0.5, 1.0}, opt);
  c.pass = st.pass;
  for (const auto& r : st.tests) c.details.push_back("shift: " + summary(r));
  const auto rf = check_increment_reflexivity(e, iv, opt);
  c.pass = c.pass && rf.pass;
  c.details.push_back("reflexivity: " + summary(rf));
  return c;
}

Check covariance_operators(std::size_t paths, std::uint64_t seed) {
  Check c{"MC covariance of Z vs q_t and g(r,s)", true, {}};
  const EquationSpec spec = four_mode_spec();
  const GridSpec g(0.0, 2.0, 201);
  const VectorEnsemble X = solve_mild(spec, g, paths, seed);
  double worst_bias = 0.0;
  for (auto [r, s] : {std::pair{1.0, 1.0}, std::pair{2.0, 2.0}, std::pair{0.5, 1.5}}) {
    const CovMatrix q = covariance_g(spec, r, s);
    const CovMatrix qd = covariance_g_discrete(spec, g, r, s);
    const Samples A = X.at(r), B = X.at(s);
    int bad = 0;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 4; ++j) {
        if (r == s && j < i) continue;
        const auto m = mean_err(A.col(i).array() * B.col(j).array());
        const double z = (m.mean - q.m(i, j)) / m.stderr_;
        worst = std::max(worst, std::abs(z));
        worst_bias = std::max(worst_bias, std::abs(qd.m(i, j) - q.m(i, j)) / m.stderr_);
        if (std::abs(z) > 3.0) {
          ++bad;
          c.details.push_back("BAD (" + std::to_string(i) + "," + std::to_string(j) + ") MC " +
                              fmt(m.mean) + " +- " + fmt(m.stderr_, 3) + " vs " + fmt(q.m(i, j)));
        }
      }
    c.pass = c.pass && bad == 0;
    c.details.push_back((r == s ? "q_" + fmt(r) : "g(" + fmt(r) + "," + fmt(s) + ")") +
                        ": max |MC - quadrature| / se = " + fmt(worst, 3) + ", trace " +
                        fmt(q.m.trace()));
  }
  c.details.push_back("scheme bias max |q_disc - q| / se = " + fmt(worst_bias, 3) + ", " +
                      std::to_string(paths) + " paths, dt " + fmt(g.dt()));
  return c;
}

Check limiting_measure(std::size_t paths, std::uint64_t seed) {
  Check c{"Law(X_t^x) approaches the limiting measure", true, {}};
  EquationSpec spec = four_mode_spec();
  spec.x0.x = Eigen::VectorXd::Constant(4, 8.0);
  const auto lim = check_limit_condition(spec);
  c.pass = lim.pass;
  c.details.push_back(lim.message);

  const GridSpec g(0.0, 8.0, 401);
  const VectorEnsemble X = solve_mild(spec, g, paths, seed);
  const XInfinitySample xi = sample_x_infinity(spec, 60.0, g.dt(), paths, seed + 1);
  c.details.push_back("x_infinity surrogate: T_trunc 60, truncation E|.|^2 = " + fmt(xi.truncation_ms, 3));
  const Eigen::MatrixXd qinf = covariance_q_infinity_closed(spec).m;

  EnergyOptions opt;
  opt.seed = seed;
  opt.max_per_sample = paths;
  double prev = INFINITY, prev_w = INFINITY;
  for (double t : {1.0, 2.0, 4.0, 8.0}) {
    const auto rep = energy_two_sample(X.at(t), xi.x, opt);
    // Gaussian W2 distance between N(S(t)x, q_t) and N(0, q_inf)
    const Eigen::MatrixXd qt = covariance_qt(spec, t).m;
    Eigen::VectorXd mean(4);
    for (Eigen::Index n = 0; n < 4; ++n) mean[n] = std::exp(-spec.lambda[n] * t) * spec.x0.x[n];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(qinf);
    const Eigen::MatrixXd r = es.operatorSqrt();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es2(r * qt * r);
    const double w2 = std::sqrt(mean.squaredNorm() + qt.trace() + qinf.trace() -
                                2.0 * es2.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum());
    const bool dec = rep.statistic < prev && w2 < prev_w;
    c.pass = c.pass && dec;
    c.details.push_back(std::string(dec ? "ok  " : "BAD ") + "t=" + fmt(t) + ": energy statistic " +
                        fmt(rep.statistic) + " (p " + fmt(rep.p_value, 3) + "), Gaussian W2 " + fmt(w2));
    prev = rep.statistic;
    prev_w = w2;
  }
  return c;
}

Check stationary_solution(std::size_t paths, std::uint64_t seed) {
  Check c{"x_infinity solution is strictly stationary", true, {}};
  EquationSpec spec = four_mode_spec();
  spec.x0.kind = InitialKind::x_infinity;
  spec.x0.T_trunc = 60.0;
  const GridSpec g(0.0, 3.0, 151);
  const VectorEnsemble X = solve_mild(spec, g, paths, seed);
  const std::size_t half = paths / 2;
  auto joint = [&](const std::vector<double>& ts, std::size_t first) {
    Samples s(static_cast<Eigen::Index>(half), static_cast<Eigen::Index>(4 * ts.size()));
    for (std::size_t k = 0; k < ts.size(); ++k)
      s.middleCols(static_cast<Eigen::Index>(4 * k), 4) =
          X.at(ts[k]).middleRows(static_cast<Eigen::Index>(first), static_cast<Eigen::Index>(half));
    return s;
  };
  EnergyOptions opt;
  opt.seed = seed;
  const std::vector<double> base{0.5, 1.0, 2.0};
  std::vector<double> shifted;
  for (double t : base) shifted.push_back(t + 1.0);
  const auto rep = energy_two_sample(joint(base, 0), joint(shifted, half), opt);
  c.pass = rep.pass;
  c.details.push_back("(X_0.5, X_1, X_2) vs (X_1.5, X_2, X_3): " + summary(rep));
  // marginal covariance at t = 0 against q_inf
  const Eigen::MatrixXd qinf = covariance_q_infinity_closed(spec).m;
  const Samples x0 = X.at(0.0);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i) {
    const auto m = mean_err(x0.col(i).array().square());
    worst = std::max(worst, std::abs(m.mean - qinf(i, i)) / m.stderr_);
  }
  c.details.push_back("Var X_0 vs q_inf diagonal: max |z| = " + fmt(worst, 3) + " (report only)");
  return c;
}

Check shift_threshold(const std::vector<double>& Hs) {
  Check c{"shift example: beta > H + 1/2 threshold", true, {}};
  const double eps = 1e-6;
  for (double H : Hs) {
    const double edge = H + 0.5;
    const auto below = criteria::shift_trace_criterion(edge - eps, H);
    const auto above = criteria::shift_trace_criterion(edge + eps, H);
    const bool flip = !below.limiting_measure && above.limiting_measure && std::isfinite(above.sup_trace);
    c.pass = c.pass && flip;
    c.details.push_back(std::string(flip ? "ok  " : "BAD ") + "H=" + fmt(H) + ": beta=" +
                        fmt(edge - eps, 10) + " -> " + (below.limiting_measure ? "exists" : "none") +
                        ", beta=" + fmt(edge + eps, 10) + " -> " +
                        (above.limiting_measure ? "exists" : "none") + " (sup Tr q_t " +
                        fmt(above.sup_trace, 4) + ")");
    const double mid = 0.5 * (1.0 + edge);
    const auto contrast = criteria::shift_trace_criterion(mid, H);
    const bool ok_c = contrast.wiener_limit && !contrast.limiting_measure;
    c.pass = c.pass && ok_c;
    c.details.push_back(std::string(ok_c ? "ok  " : "BAD ") + "H=" + fmt(H) + ", beta=" + fmt(mid) +
                        ": Wiener driver " + (contrast.wiener_limit ? "admits" : "has no") +
                        " a limiting measure, fBm driver " +
                        (contrast.limiting_measure ? "admits one" : "does not"));
    for (double beta : {edge + 0.5, edge + 1.5}) {
      const auto jc = criteria::j_closed_form(beta, H);
      const auto jq = criteria::j_quadrature(beta, H);
      const double rel = std::abs(jc.value - jq.value) / jc.value;
      const bool ok = rel <= 1e-3;
      c.pass = c.pass && ok;
      c.details.push_back(std::string(ok ? "ok  " : "BAD ") + "J(" + fmt(beta) + "," + fmt(H) +
                          "): closed " + fmt(jc.value, 10) + ", quadrature " + fmt(jq.value, 10) +
                          ", rel diff " + fmt(rel, 3));
    }
  }
  return c;
}

Check heat_example() {
  Check c{"heat example: d < 4H and HS decay r^(-d/2)", true, {}};
  for (int d = 1; d <= 3; ++d)
    for (double H : {0.55, 0.7, 0.75, 0.8, 0.95}) {
      const auto rep = criteria::heat_admissibility(d, H);
      const bool expect = d < 4.0 * H;
      const bool ok = rep.admissible == expect && rep.exponent_ok;
      c.pass = c.pass && ok;
      c.details.push_back(std::string(ok ? "ok  " : "BAD ") + "d=" + std::to_string(d) + " H=" +
                          fmt(H) + ": " + (rep.admissible ? "admissible" : "not admissible") +
                          ", fitted exponent " + fmt(rep.fitted_exponent, 4) + " (expected " +
                          fmt(rep.expected_exponent) + ")");
    }
  return c;
}

std::vector<std::string> suite_names() {
  return {"kernel", "isometry", "law-symmetry", "stationarity", "limit", "criteria"};
}

bool suite_is_stochastic(const std::string& name) {
  return name != "kernel" && name != "criteria";
}

std::size_t default_paths(const std::string& name) {
  if (name == "isometry") return 20000;
  if (name == "law-symmetry") return 4500;
  if (name == "stationarity") return 4000;
  if (name == "limit") return 2000;
  return 0;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = name;
  const std::size_t paths = opt.paths ? opt.paths : default_paths(name);
  if (name == "kernel") {
    r.checks.push_back(kernel_closed_form({opt.H}, 50, 1e-4, opt.seed));
    r.checks.push_back(kernel_bounds(opt.H));
  } else if (name == "isometry") {
    r.checks.push_back(isometry(opt.H, 20, paths, opt.seed));
  } else if (name == "law-symmetry") {
    r.checks.push_back(law_symmetries(opt.family, opt.H, paths, opt.seed));
  } else if (name == "stationarity") {
    if (opt.x0 == "x-infinity")
      r.checks.push_back(stationary_solution(paths, opt.seed));
    else
      r.checks.push_back(increment_laws(opt.family, opt.H, paths, opt.seed));
  } else if (name == "limit") {
    r.checks.push_back(limiting_measure(paths, opt.seed));
  } else if (name == "criteria") {
    r.checks.push_back(shift_threshold({0.6, 0.75, 0.9}));
    r.checks.push_back(heat_example());
  } else {
    throw PreconditionError("unknown suite '" + name + "'");
  }
  return r;
}

}  // namespace volterra::app
