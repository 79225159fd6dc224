#include "volterra/stochastic_integral.h"

#include <algorithm>
#include <cmath>

#include "volterra/error.h"
#include "volterra/quadrature.h"

namespace volterra {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<Eigen::VectorXd> values)
    : t_(std::move(breakpoints)), f_(std::move(values)) {
  if (t_.size() < 2 || f_.size() + 1 != t_.size())
    throw PreconditionError("step function: need n+1 breakpoints for n values");
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (!std::isfinite(t_[i])) throw PreconditionError("step function: non-finite breakpoint");
    if (i > 0 && !(t_[i] > t_[i - 1]))
      throw PreconditionError("step function: breakpoints must increase strictly");
  }
  for (const auto& v : f_) {
    if (v.size() != f_.front().size() || v.size() == 0)
      throw PreconditionError("step function: values must share one positive dimension");
    if (!v.allFinite()) throw PreconditionError("step function: non-finite value");
  }
}

StepFunction::StepFunction(std::vector<double> breakpoints, const std::vector<double>& values)
    : StepFunction(std::move(breakpoints), [&] {
        std::vector<Eigen::VectorXd> v;
        for (double x : values) v.push_back(Eigen::VectorXd::Constant(1, x));
        return v;
      }()) {}

Eigen::VectorXd StepFunction::operator()(double r) const {
  if (r < t_.front() || r >= t_.back()) return Eigen::VectorXd::Zero(dim());
  const auto it = std::upper_bound(t_.begin(), t_.end(), r);
  return f_[static_cast<std::size_t>(it - t_.begin()) - 1];
}

StepFunction StepFunction::scaled(double a) const {
  std::vector<Eigen::VectorXd> v;
  for (const auto& x : f_) v.push_back(a * x);
  return StepFunction(t_, std::move(v));
}

StepFunction StepFunction::combine(double a, const StepFunction& f, double b,
                                   const StepFunction& g) {
  if (f.dim() != g.dim()) throw PreconditionError("step function: dimension mismatch");
  std::vector<double> t = f.t_;
  t.insert(t.end(), g.t_.begin(), g.t_.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  std::vector<Eigen::VectorXd> v;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const double mid = 0.5 * (t[i] + t[i + 1]);
    v.push_back(a * f(mid) + b * g(mid));
  }
  return StepFunction(std::move(t), std::move(v));
}

IntegrandFn IntegrandFn::scalar(std::function<double(double)> g) {
  IntegrandFn f;
  f.dim = 1;
  f.f = [g = std::move(g)](double r) { return Eigen::VectorXd::Constant(1, g(r)); };
  return f;
}

double IntegrandFn::lq_norm(double s, double t, double alpha) const {
  const double q = 2.0 / (1.0 + 2.0 * alpha);
  bool bad = false;
  auto g = [&](double r) {
    const double v = std::pow(f(r).norm(), q);
    if (!std::isfinite(v)) bad = true;
    return v;
  };
  const double I = quad::endpoint(g, s, t, 1e-10).value;
  if (bad || !std::isfinite(I)) throw IntegrandError("integrand is not finite on the interval");
  return std::pow(I, 1.0 / q);
}

Eigen::VectorXd kstar(const VolterraKernel& k, const StepFunction& f, double r) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(f.dim());
  const auto& t = f.breakpoints();
  for (std::size_t j = 0; j < f.pieces(); ++j) {
    if (t[j + 1] <= r) continue;
    out += f.values()[j] * kernel_increment(k, std::max(t[j], r), t[j + 1], r);
  }
  return out;
}

double inner_product(const VolterraKernel& k, const StepFunction& f, const StepFunction& g) {
  if (f.dim() != g.dim()) throw PreconditionError("inner product: dimension mismatch");
  const auto& a = f.breakpoints();
  const auto& b = g.breakpoints();
  double s = 0.0;
  for (std::size_t i = 0; i < f.pieces(); ++i)
    for (std::size_t j = 0; j < g.pieces(); ++j) {
      const double w = f.values()[i].dot(g.values()[j]);
      if (w != 0.0) s += w * cov_R(k, a[i], a[i + 1], b[j], b[j + 1]);
    }
  return s;
}

DNorm d_norm(const VolterraKernel& k, const StepFunction& f, double rel_tol) {
  DNorm d;
  d.value = inner_product(k, f, f);
  const auto& t = f.breakpoints();
  auto F = [&](double r) { return kstar(k, f, r).squaredNorm(); };
  auto rule = [&](double lo, double hi) { return quad::endpoint(F, lo, hi, 1e-10); };
  d.via_kstar = quad::split_sum(t.front(), t.back(), {t.begin() + 1, t.end() - 1}, rule).value +
                integrate_past(F, t.front(), t.back() - t.front(), k.alpha());
  const double scale = std::max(std::abs(d.value), std::abs(d.via_kstar));
  d.rel_discrepancy = scale > 0.0 ? std::abs(d.value - d.via_kstar) / scale : 0.0;
  if (d.rel_discrepancy > rel_tol && scale > 1e-14)
    throw ConsistencyError("D-norm routes disagree", d.value, d.via_kstar);
  return d;
}

double d_norm_sq(const VolterraKernel& k, const StepFunction& f) { return d_norm(k, f).value; }

Eigen::MatrixXd integrate_step(const StepFunction& f, const Ensemble& e) {
  const auto& t = f.breakpoints();
  std::vector<Eigen::Index> idx;
  for (double x : t) idx.push_back(static_cast<Eigen::Index>(e.grid.snap(x)));
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1])
      throw AlignmentError("breakpoints " + std::to_string(t[i - 1]) + " and " +
                           std::to_string(t[i]) + " snap to the same grid point");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(e.n_paths()), f.dim());
  for (std::size_t j = 0; j < f.pieces(); ++j) {
    const Eigen::VectorXd db = (e.values.row(idx[j + 1]) - e.values.row(idx[j])).transpose();
    out.noalias() += db * f.values()[j].transpose();
  }
  return out;
}

StepFunction cell_average(const IntegrandFn& f, double s, double t, std::size_t n_sub,
                          const GridSpec& grid) {
  if (!(s < t)) throw PreconditionError("definite integral: need s < t");
  const std::size_t i0 = grid.snap(s), i1 = grid.snap(t);
  if (i1 <= i0) throw AlignmentError("definite integral: [s, t] collapses on the grid");
  const std::size_t steps = i1 - i0;
  if (n_sub == 0) n_sub = steps;
  if (steps % n_sub != 0)
    throw AlignmentError("definite integral: n_sub must divide the grid steps in [s, t]");
  const std::size_t per = steps / n_sub;
  std::vector<double> bp;
  for (std::size_t k = 0; k <= n_sub; ++k) bp.push_back(grid.time(i0 + k * per));
  std::vector<Eigen::VectorXd> vals;
  bool bad = false;
  for (std::size_t k = 0; k < n_sub; ++k) {
    Eigen::VectorXd avg(f.dim);
    for (Eigen::Index c = 0; c < f.dim; ++c) {
      auto g = [&](double r) {
        const double v = f.f(r)[c];
        if (!std::isfinite(v)) bad = true;
        return v;
      };
      avg[c] = quad::endpoint(g, bp[k], bp[k + 1], 1e-10).value / (bp[k + 1] - bp[k]);
    }
    if (bad || !avg.allFinite()) throw IntegrandError("integrand is not finite on [s, t]");
    vals.push_back(std::move(avg));
  }
  return StepFunction(std::move(bp), std::move(vals));
}

Eigen::MatrixXd definite_integral(const IntegrandFn& f, double s, double t, const Ensemble& e,
                                  std::size_t n_sub) {
  return integrate_step(cell_average(f, s, t, n_sub, e.grid), e);
}

LawSymmetryReport check_law_symmetries(const IntegrandFn& f, double t, const Ensemble& e,
                                       const EnergyOptions& opt) {
  if (!(t > 0.0)) throw PreconditionError("law symmetries: t must be positive");
  const std::size_t third = e.n_paths() / 3;
  IntegrandFn rev{[&](double r) { return f.f(t - r); }, f.dim};
  IntegrandFn refl{[&](double u) { return f.f(-u); }, f.dim};
  const Samples A = definite_integral(rev, 0.0, t, e.paths(0, third));
  const Samples B = definite_integral(f, 0.0, t, e.paths(third, third));
  const Samples C = definite_integral(refl, -t, 0.0, e.paths(2 * third, third));
  std::vector<TwoSampleReport> tests;
  EnergyOptions o = opt;
  tests.push_back(energy_two_sample(A, B, o));
  tests.back().name = "reversed vs forward";
  o.seed = opt.seed + 1;
  tests.push_back(energy_two_sample(B, C, o));
  tests.back().name = "forward vs reflected";
  o.seed = opt.seed + 2;
  tests.push_back(energy_two_sample(A, C, o));
  tests.back().name = "reversed vs reflected";
  return {bonferroni(std::move(tests), opt.level)};
}

}  // namespace volterra
