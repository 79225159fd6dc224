#include "volterra/kernel.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "volterra/error.h"
#include "volterra/quadrature.h"
#include "volterra/special.h"

namespace volterra {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw PreconditionError(std::string(what) + ": non-finite argument");
}

double phi_by_quadrature(const VolterraKernel& k, double lo, double gap, const PhiOptions& opt) {
  const double a = k.alpha();
  const double c = k.regularity_const();
  const double hi = lo + gap;
  // s = lo - r runs over (0, inf)
  auto g = [&](double s) { return k.deriv_lag(hi, gap + s) * k.deriv_lag(lo, s); };

  double partial = quad::power_singular(g, a - 1.0, 0.0, gap, opt.panel_tol).value;
  double L = gap;
  double tail = 0.0;
  for (int i = 0; i < opt.max_doublings; ++i) {
    partial += quad::smooth(g, L, 2.0 * L, opt.panel_tol).value;
    L *= 2.0;
    tail = c * c * std::pow(L, 2.0 * a - 1.0) / (1.0 - 2.0 * a);
    if (tail <= opt.rel_tail * std::abs(partial)) return partial;
  }
  throw QuadratureError("phi: tail truncation did not reach tolerance", tail);
}

}  // namespace

FbmKernel::FbmKernel(double H, std::optional<double> regularity_const) : H_(H) {
  if (!(H > 0.5 && H < 1.0)) throw PreconditionError("FbmKernel: H must lie in (1/2, 1)");
  C_H_ = normalizer(H);
  c_H_ = C_H_ * (H - 0.5);
  reg_ = regularity_const.value_or(c_H_);
  if (!(reg_ > 0.0)) throw PreconditionError("FbmKernel: regularity constant must be positive");
}

double FbmKernel::normalizer(double H) {
  return std::sqrt(2.0 * H / ((H - 0.5) * special::beta(H - 0.5, 2.0 - 2.0 * H)));
}

double FbmKernel::eval(double t, double r) const {
  return t > r ? C_H_ * std::pow(t - r, H_ - 0.5) : 0.0;
}

double FbmKernel::deriv(double u, double r) const {
  return u > r ? c_H_ * std::pow(u - r, H_ - 1.5) : 0.0;
}

double FbmKernel::deriv_lag(double, double lag) const {
  return lag > 0.0 ? c_H_ * std::pow(lag, H_ - 1.5) : 0.0;
}

std::optional<double> FbmKernel::phi_closed(double, double gap) const {
  return H_ * (2.0 * H_ - 1.0) * std::pow(gap, 2.0 * H_ - 2.0);
}

std::optional<double> FbmKernel::cov_closed(double s1, double t1, double s2, double t2) const {
  const double e = 2.0 * H_;
  auto p = [e](double x) { return std::pow(std::abs(x), e); };
  return 0.5 * (p(t1 - s2) + p(s1 - t2) - p(t1 - t2) - p(s1 - s2));
}

FunctionKernel::FunctionKernel(double alpha, double regularity_const, Fn eval, Fn deriv,
                               Fn deriv_lag)
    : alpha_(alpha),
      reg_(regularity_const),
      eval_(std::move(eval)),
      deriv_(std::move(deriv)),
      deriv_lag_(std::move(deriv_lag)) {
  if (!(alpha > 0.0 && alpha < 0.5)) throw PreconditionError("kernel: alpha must lie in (0, 1/2)");
  if (!(regularity_const >= 0.0)) throw PreconditionError("kernel: negative regularity constant");
  if (!eval_ || !deriv_) throw PreconditionError("kernel: empty callable");
}

double FunctionKernel::eval(double t, double r) const { return t > r ? eval_(t, r) : 0.0; }

double FunctionKernel::deriv(double u, double r) const { return u > r ? deriv_(u, r) : 0.0; }

double FunctionKernel::deriv_lag(double u, double lag) const {
  if (!(lag > 0.0)) return 0.0;
  return deriv_lag_ ? deriv_lag_(u, lag) : deriv_(u, u - lag);
}

std::unique_ptr<VolterraKernel> opaque_fbm_kernel(double H) {
  auto fbm = std::make_shared<FbmKernel>(H);
  return std::make_unique<FunctionKernel>(
      fbm->alpha(), fbm->regularity_const(),
      [fbm](double t, double r) { return fbm->eval(t, r); },
      [fbm](double u, double r) { return fbm->deriv(u, r); },
      [fbm](double u, double lag) { return fbm->deriv_lag(u, lag); });
}

double phi_gap(const VolterraKernel& k, double lo, double gap) {
  if (!(gap > 0.0)) throw PreconditionError("phi: u and v must differ");
  if (auto c = k.phi_closed(lo, gap)) return *c;
  return phi_by_quadrature(k, lo, gap, PhiOptions{});
}

double phi(const VolterraKernel& k, double u, double v) {
  require_finite(u, "phi");
  require_finite(v, "phi");
  if (u == v) throw PreconditionError("phi: u and v must differ");
  return phi_gap(k, std::min(u, v), std::abs(u - v));
}

double phi_quadrature(const VolterraKernel& k, double u, double v, const PhiOptions& opt) {
  require_finite(u, "phi");
  require_finite(v, "phi");
  if (u == v) throw PreconditionError("phi: u and v must differ");
  return phi_by_quadrature(k, std::min(u, v), std::abs(u - v), opt);
}

double phi_weighted_integral(const VolterraKernel& k, const std::function<double(double)>& f,
                             double a1, double b1, const std::function<double(double)>& g,
                             double a2, double b2, double tol) {
  if (a1 > b1 || a2 > b2) throw PreconditionError("phi_weighted_integral: reversed interval");
  if (a1 == b1 || a2 == b2) return 0.0;
  const double p = 2.0 * k.alpha() - 1.0;
  // quadrature phi carries ~1e-8 noise; asking for more only burns evaluations
  if (!k.phi_closed(0.0, 1.0)) tol = std::max(tol, 1e-6);

  auto inner = [&](double u) {
    double acc = 0.0;
    if (u > a2) {
      auto left = [&](double x) { return g(u - x) * phi_gap(k, u - x, x); };
      acc += quad::power_singular(left, p, std::max(u - b2, 0.0), u - a2, tol).value;
    }
    if (b2 > u) {
      auto right = [&](double x) { return g(u + x) * phi_gap(k, u, x); };
      acc += quad::power_singular(right, p, std::max(a2 - u, 0.0), b2 - u, tol).value;
    }
    return acc;
  };
  auto outer = [&](double lo, double hi) {
    return quad::endpoint([&](double u) { return f(u) * inner(u); }, lo, hi, tol);
  };
  return quad::split_sum(a1, b1, {a2, b2}, outer).value;
}

double cov_R_phi(const VolterraKernel& k, double s1, double t1, double s2, double t2) {
  for (double x : {s1, t1, s2, t2}) require_finite(x, "cov_R");
  double sign = 1.0;
  if (t1 < s1) {
    std::swap(s1, t1);
    sign = -sign;
  }
  if (t2 < s2) {
    std::swap(s2, t2);
    sign = -sign;
  }
  if (s1 == t1 || s2 == t2) return 0.0;
  auto one = [](double) { return 1.0; };
  return sign * phi_weighted_integral(k, one, s1, t1, one, s2, t2);
}

double cov_R(const VolterraKernel& k, double s1, double t1, double s2, double t2) {
  for (double x : {s1, t1, s2, t2}) require_finite(x, "cov_R");
  if (auto c = k.cov_closed(s1, t1, s2, t2)) return *c;
  return cov_R_phi(k, s1, t1, s2, t2);
}

double kernel_increment(const VolterraKernel& k, double s, double t, double r) {
  if (s == t) return 0.0;
  const double lo = std::min(s, t);
  const double hi = std::max(s, t);
  if (r >= hi) return 0.0;
  if (lo - r > 4.0 * (hi - lo)) {
    auto d = [&](double u) { return k.deriv(u, r); };
    const double v = quad::smooth(d, lo, hi, 1e-13, 6).value;
    return t > s ? v : -v;
  }
  return k.eval(t, r) - k.eval(s, r);
}

double integrate_past(const std::function<double(double)>& F, double lo, double span,
                      double alpha) {
  // Below lo the integrand decays like x^(-1-beta), beta = 1 - 2 alpha, in
  // x = lo - r. Near range by tanh-sinh, far range with x = X y^(-1/beta),
  // under which the integrand is asymptotically constant in y.
  const double X = 4.0 * span;
  double total = quad::endpoint([&](double x) { return F(lo - x); }, 0.0, X, 1e-11).value;
  const double beta = 1.0 - 2.0 * alpha;
  auto far = [&](double y) {
    if (y <= 0.0) return 0.0;
    const double x = X * std::pow(y, -1.0 / beta);
    return F(lo - x) * x / (beta * y);
  };
  total += quad::smooth(far, 0.0, 1.0, 1e-11).value;
  return total;
}

double cov_R_direct(const VolterraKernel& k, double s1, double t1, double s2, double t2) {
  for (double x : {s1, t1, s2, t2}) require_finite(x, "cov_R");
  if (s1 == t1 || s2 == t2) return 0.0;
  auto F = [&](double r) {
    return kernel_increment(k, s1, t1, r) * kernel_increment(k, s2, t2, r);
  };
  std::array<double, 4> pts{s1, t1, s2, t2};
  std::sort(pts.begin(), pts.end());
  const double lo = pts[0];
  const double hi = std::min(std::max(s1, t1), std::max(s2, t2));
  double total = 0.0;
  if (hi > lo) {
    auto piece = [&](double a, double b) { return quad::endpoint(F, a, b, 1e-11); };
    total += quad::split_sum(lo, hi, {pts[1], pts[2]}, piece).value;
  }
  total += integrate_past(F, lo, pts[3] - pts[0], k.alpha());
  return total;
}

double increment_bound_const(const VolterraKernel& k) {
  const double a = k.alpha();
  const double c = k.regularity_const();
  return c * c * special::beta(a, 1.0 - 2.0 * a) / (a * (1.0 + 2.0 * a));
}

RegularityReport check_regularity(const VolterraKernel& k, const std::vector<GridPoint>& grid,
                                  double tol) {
  RegularityReport rep;
  rep.bound = k.regularity_const() * (1.0 + tol);
  const double a = k.alpha();
  for (const auto& pt : grid) {
    if (!(pt.u > pt.r)) throw PreconditionError("check_regularity: grid needs u > r");
    const double ratio = std::abs(k.deriv(pt.u, pt.r)) * std::pow(pt.u - pt.r, 1.0 - a);
    if (ratio > rep.max_ratio || (rep.max_ratio == 0.0 && &pt == &grid.front())) {
      rep.max_ratio = std::max(rep.max_ratio, ratio);
      rep.worst_u = pt.u;
      rep.worst_r = pt.r;
    }
  }
  rep.pass = rep.max_ratio <= rep.bound;
  return rep;
}

}  // namespace volterra
