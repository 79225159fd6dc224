#pragma once

// Thin wrappers over Boost.Math quadrature plus the two transforms this
// library leans on everywhere: the power substitution that removes an
// algebraic endpoint singularity and splitting at interior kinks.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "volterra/error.h"

namespace volterra::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;
};

inline constexpr double kDefaultTol = 1e-10;

/// Per-thread integrators; nesting depth selects an independent instance so a
/// nested call never re-enters an integrator that is mid-evaluation.
boost::math::quadrature::tanh_sinh<double>& tanh_sinh_at(int depth);
boost::math::quadrature::exp_sinh<double>& exp_sinh_at(int depth);

class DepthGuard {
 public:
  DepthGuard();
  ~DepthGuard();
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;
  int depth() const { return depth_; }

 private:
  int depth_;
};

/// Adaptive Gauss-Kronrod (G10K21) for smooth integrands on a finite interval.
/// The interval is mapped onto [-1, 1] first: the Boost recursion compares an
/// unscaled error estimate with a scaled tolerance, which on short intervals
/// never terminates before max_depth.
template <class F>
Result smooth(F&& f, double a, double b, double tol = kDefaultTol, unsigned max_depth = 15) {
  Result r;
  if (a == b) return r;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto g = [&](double t) -> double { return f(mid + half * t); };
  r.value = half * boost::math::quadrature::gauss_kronrod<double, 21>::integrate(
                       g, -1.0, 1.0, max_depth, tol, &r.error);
  r.error *= std::abs(half);
  return r;
}

/// Double-exponential rule on a finite interval; tolerates algebraic endpoint
/// singularities and kinks at the endpoints.
template <class F>
Result endpoint(F&& f, double a, double b, double tol = kDefaultTol) {
  Result r;
  if (a == b) return r;
  DepthGuard guard;
  auto g = [&](double x) -> double {
    const double y = f(x);
    return std::isfinite(y) ? y : 0.0;
  };
  r.value = tanh_sinh_at(guard.depth()).integrate(g, a, b, tol, &r.error);
  return r;
}

/// Integral over [a, +inf) for integrands with algebraic or faster decay.
template <class F>
Result half_line(F&& f, double a, double tol = kDefaultTol) {
  Result r;
  DepthGuard guard;
  auto g = [&](double x) -> double {
    const double y = f(x);
    return std::isfinite(y) ? y : 0.0;
  };
  r.value = exp_sinh_at(guard.depth()).integrate(g, a, std::numeric_limits<double>::infinity(),
                                                  tol, &r.error);
  return r;
}

/// Integral of h(x) over [x0, x1] with 0 <= x0 where h(x) ~ x^p near 0, p > -1.
/// The substitution x = y^{1/(p+1)} turns the integrand into a bounded one.
template <class F>
Result power_singular(F&& h, double p, double x0, double x1, double tol = kDefaultTol) {
  if (!(p > -1.0)) throw PreconditionError("power_singular: exponent must exceed -1");
  if (x1 <= x0) return {};
  const double q = p + 1.0;
  const double inv_q = 1.0 / q;
  const double y0 = std::pow(x0, q);
  const double y1 = std::pow(x1, q);
  auto g = [&](double y) -> double {
    if (y <= 0.0) return 0.0;
    const double x = std::pow(y, inv_q);
    // dx/dy = x^{-p} / q
    return h(x) * std::pow(x, -p) * inv_q;
  };
  return smooth(g, y0, y1, tol);
}

/// Split [a, b] at the given interior points and sum `rule` over the pieces.
template <class Rule>
Result split_sum(double a, double b, std::vector<double> cuts, Rule&& rule) {
  std::vector<double> pts{a};
  std::sort(cuts.begin(), cuts.end());
  for (double c : cuts)
    if (c > pts.back() && c < b) pts.push_back(c);
  pts.push_back(b);
  Result total;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Result piece = rule(pts[i], pts[i + 1]);
    total.value += piece.value;
    total.error += piece.error;
  }
  return total;
}

}  // namespace volterra::quad
