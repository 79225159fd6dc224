#include "volterra/criteria.h"

#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "volterra/error.h"
#include "volterra/quadrature.h"
#include "volterra/spde.h"
#include "volterra/special.h"

namespace volterra::criteria {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = boost::math::constants::pi<double>();

void require_H(double H) {
  if (!(H > 0.5 && H < 1.0)) throw PreconditionError("H must lie in (1/2, 1)");
}

// int_0^1 z^(2H-2) 2F1(beta, 2H; 2 beta; z) dz. Near z = 1 the leading
// asymptotic term of 2F1 is subtracted and integrated on its own.
double z_integral(double beta, double H) {
  const double a = beta, b = 2.0 * H, c = 2.0 * beta;
  auto left = [&](double z) { return std::pow(z, b - 2.0) * special::hyp2f1(a, b, c, z); };
  double total = quad::power_singular(left, b - 2.0, 0.0, 0.5, 1e-12).value;

  // w = 1 - z on (0, 1/2]
  auto weight = [&](double w) { return std::pow(1.0 - w, b - 2.0); };
  auto F = [&](double w) { return special::hyp2f1_complement(a, b, c, w); };
  const double m = c - a - b;  // beta - 2H
  if (m > 1e-9) {
    auto g = [&](double w) { return weight(w) * F(w); };
    total += quad::smooth(g, 0.0, 0.5, 1e-12).value;
  } else if (m >= -1e-9) {
    const double L = special::hyp2f1_log_limit(a, b);
    auto rest = [&](double w) { return weight(w) * (F(w) + L * std::log(w)); };
    auto lead = [&](double w) { return -L * weight(w) * std::log(w); };
    total += quad::endpoint(rest, 0.0, 0.5, 1e-12).value + quad::endpoint(lead, 0.0, 0.5, 1e-12).value;
  } else {
    const double L = special::hyp2f1_power_limit(a, b, c);
    auto rest = [&](double w) { return weight(w) * (F(w) - L * std::pow(w, m)); };
    auto lead = [&](double w) { return L * weight(w) * std::pow(w, m); };
    total += quad::endpoint(rest, 0.0, 0.5, 1e-12).value +
             quad::power_singular(lead, m, 0.0, 0.5, 1e-12).value;
  }
  return total;
}

}  // namespace

ShiftExample::ShiftExample(double b, double h) : beta(b), H(h) {
  require_H(H);
  if (!(beta > 0.5)) throw PreconditionError("shift example: beta must exceed 1/2");
}

HeatExample::HeatExample(int dim, double h) : d(dim), H(h) {
  require_H(H);
  if (d < 1 || d > 3) throw PreconditionError("heat example: d must be 1, 2 or 3");
}

double gauss_2f1(double a, double b, double c, double z) {
  if (z == 1.0) {
    if (!(c - a - b > 0.0)) throw PreconditionError("2F1 diverges at z = 1 unless c - a - b > 0");
    return special::hyp2f1_at_one(a, b, c);
  }
  return special::hyp2f1(a, b, c, z);
}

JValue j_closed_form(double beta, double H) {
  const ShiftExample ex(beta, H);
  if (!(beta > H)) throw PreconditionError("j_closed_form: needs beta > H; use j_quadrature");
  JValue j;
  j.z_integral = z_integral(beta, H);
  if (beta <= H + 0.5) {
    j.divergent = true;
    j.xi_factor = kInf;
    j.value = kInf;
    return j;
  }
  j.xi_factor = 1.0 / (2.0 * beta - 2.0 * H - 1.0);
  const double gam = std::exp(std::lgamma(2.0 * H) + std::lgamma(2.0 * beta - 2.0 * H) -
                              std::lgamma(2.0 * beta));
  j.value = 2.0 * gam * j.xi_factor * j.z_integral;
  return j;
}

JQuadrature j_quadrature(double beta, double H, double truncation) {
  const ShiftExample ex(beta, H);
  if (!(truncation >= 2.0)) throw PreconditionError("j_quadrature: truncation must be >= 2");
  const double p = 2.0 * H - 2.0;
  // K(u, v) = int_0^inf (u + xi + 1)^-beta (v + xi + 1)^-beta dxi
  auto K = [&](double u, double v) {
    auto f = [&](double xi) { return std::pow(u + xi + 1.0, -beta) * std::pow(v + xi + 1.0, -beta); };
    return quad::half_line(f, 0.0, 1e-11).value;
  };
  // F(u) = int_0^u K(u, v) (u - v)^(2H-2) dv; J = 2 int_0^inf F
  auto F = [&](double u) {
    auto h = [&](double x) { return K(u, u - x) * std::pow(x, p); };
    return quad::power_singular(h, p, 0.0, u, 1e-10).value;
  };
  JQuadrature q;
  q.truncation = truncation;
  quad::Result first = quad::endpoint(F, 0.0, 1.0, 1e-9);
  q.head = first.value;
  q.error = first.error;
  double L = 1.0;
  while (L < truncation) {
    const double hi = std::min(2.0 * L, truncation);
    const quad::Result r = quad::smooth(F, L, hi, 1e-9);
    q.head += r.value;
    q.error += r.error;
    L = hi;
  }
  q.head *= 2.0;
  q.error *= 2.0;
  // F(u) ~ u^e for large u with e = 2H - 2 beta; the local exponent gives the tail
  const double FL = F(L), FL2 = F(0.5 * L);
  const double e = std::log(FL / FL2) / std::log(2.0);
  q.converged = beta > H + 0.5 && e < -1.0;
  if (q.converged) {
    q.tail = 2.0 * FL * L / (-(e + 1.0));
    q.error += 0.1 * std::abs(q.tail);
    q.value = q.head + q.tail;
  } else {
    q.tail = kInf;
    q.error = kInf;
    q.value = q.head;
  }
  return q;
}

ShiftVerdict shift_trace_criterion(double beta, double H) {
  const ShiftExample ex(beta, H);
  ShiftVerdict v;
  v.beta = beta;
  v.H = H;
  v.wiener_limit = beta > 1.0;
  v.limiting_measure = beta > H + 0.5;
  std::ostringstream os;
  if (v.limiting_measure) {
    v.sup_trace = H * (2.0 * H - 1.0) * j_closed_form(beta, H).value;
    os << "J finite; sup Tr q_t = " << v.sup_trace << "; limiting measure exists";
  } else {
    v.sup_trace = kInf;
    os << "int_1^inf xi^(2H-2beta) diverges (beta <= H + 1/2), sup Tr q_t = inf; no limiting measure";
    if (beta <= H) os << " (beta <= H: Gamma/2F1 form not applicable)";
  }
  if (v.wiener_limit && !v.limiting_measure) os << "; Wiener driver does admit one";
  v.note = os.str();
  return v;
}

double heat_hs_norm_sq(int d, double r, long N) {
  if (!(r > 0.0)) throw PreconditionError("heat: r must be positive");
  double theta = 0.0;
  for (long k = 1; N == 0 || k <= N; ++k) {
    const double term = std::exp(-2.0 * kPi * kPi * static_cast<double>(k * k) * r);
    theta += term;
    if (term < 1e-18 * theta) break;
  }
  return std::pow(theta, d);
}

HeatReport heat_admissibility(int d, double H) {
  const HeatExample ex(d, H);
  HeatReport rep;
  rep.d = d;
  rep.H = H;
  rep.admissible = static_cast<double>(d) < 4.0 * H;
  rep.expected_exponent = -0.5 * d;
  const int n = 31;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = std::log(rep.r_min) + (std::log(rep.r_max) - std::log(rep.r_min)) * i / (n - 1);
    const double y = std::log(heat_hs_norm_sq(d, std::exp(x)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  rep.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  rep.exponent_ok = std::abs(rep.fitted_exponent - rep.expected_exponent) <= 0.1;
  return rep;
}

HeatTrend heat_hypothesis_trend(int d, double H, const std::vector<long>& N, double T0) {
  const HeatExample ex(d, H);
  if (N.size() < 3) throw PreconditionError("heat trend: need at least three truncations");
  for (std::size_t i = 1; i < N.size(); ++i)
    if (N[i] != 2 * N[i - 1]) throw PreconditionError("heat trend: truncations must double");
  HeatTrend t;
  t.N = N;
  t.expected_growth = d / (2.0 * H) - 2.0;
  for (long n : N) {
    auto hs = [&](double r) { return heat_hs_norm_sq(d, r, n); };
    t.value.push_back(check_H(hs, H - 0.5, T0).value);
  }
  // increments V(2N) - V(N) scale like N^gamma: gamma > 0 diverges, gamma < 0 converges
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (std::size_t i = 1; i < N.size(); ++i) {
    const double inc = t.value[i] - t.value[i - 1];
    if (!(inc > 0.0)) continue;
    const double x = std::log(static_cast<double>(N[i])), y = std::log(inc);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  t.growth_exponent = m >= 2 ? (m * sxy - sx * sy) / (m * sxx - sx * sx) : -kInf;
  t.divergent = t.growth_exponent > -0.02;
  return t;
}

std::vector<ThresholdRow> threshold_table(const std::vector<double>& Hs, double eps) {
  std::vector<ThresholdRow> rows;
  for (double H : Hs) {
    const double edge = H + 0.5;
    for (double beta : {0.6, 1.0 + 0.5 * (edge - 1.0), edge - eps, edge + eps, 2.0, 3.0}) {
      if (!(beta > 0.5)) continue;
      rows.push_back({H, beta, shift_trace_criterion(beta, H)});
    }
  }
  return rows;
}

}  // namespace volterra::criteria
