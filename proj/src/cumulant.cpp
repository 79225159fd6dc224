#include <cmath>
#include <vector>

#include "volterra/error.h"
#include "volterra/process.h"
#include "volterra/quadrature.h"

namespace volterra {

namespace {

constexpr double kTol = 1e-9;

struct Interval {
  double a;
  double b;
};

double pw(double x, double p) { return std::pow(std::abs(x), p); }

// int_I |x - y|^(2p) dx dy over I1 x I2, closed form.
double S2(const Interval& I, const Interval& J, double p) {
  const double q = 2.0 * p + 2.0;  // exponent after two integrations
  auto F = [q](double x) { return std::pow(std::abs(x), q); };
  // int_a^b int_c^d |x-y|^(q-2) = (F(b-c) + F(a-d) - F(b-d) - F(a-c)) / ((q-1) q)
  return (F(I.b - J.a) + F(I.a - J.b) - F(I.b - J.b) - F(I.a - J.a)) / ((q - 1.0) * q);
}

// Q_I(x, y) = int_I |x - z|^p |z - y|^p dz.
double Q(const Interval& I, double x, double y, double p) {
  auto f = [&](double z) { return pw(x - z, p) * pw(z - y, p); };
  auto rule = [&](double lo, double hi) { return quad::endpoint(f, lo, hi, kTol); };
  return quad::split_sum(I.a, I.b, {x, y}, rule).value;
}

double S3(const Interval& I1, const Interval& I2, const Interval& I3, double p) {
  auto inner = [&](double x1) {
    auto f = [&](double x2) { return pw(x1 - x2, p) * Q(I3, x1, x2, p); };
    auto rule = [&](double lo, double hi) { return quad::endpoint(f, lo, hi, kTol); };
    return quad::split_sum(I2.a, I2.b, {x1, I3.a, I3.b}, rule).value;
  };
  auto rule = [&](double lo, double hi) { return quad::endpoint(inner, lo, hi, kTol); };
  return quad::split_sum(I1.a, I1.b, {I2.a, I2.b, I3.a, I3.b}, rule).value;
}

double S4(const Interval& I1, const Interval& I2, const Interval& I3, const Interval& I4,
          double p) {
  auto inner = [&](double x1) {
    auto f = [&](double x3) { return Q(I2, x1, x3, p) * Q(I4, x3, x1, p); };
    auto rule = [&](double lo, double hi) { return quad::endpoint(f, lo, hi, kTol); };
    return quad::split_sum(I3.a, I3.b, {x1, I2.a, I2.b, I4.a, I4.b}, rule).value;
  };
  auto rule = [&](double lo, double hi) { return quad::endpoint(inner, lo, hi, kTol); };
  return quad::split_sum(I1.a, I1.b, {I2.a, I2.b, I3.a, I3.b, I4.a, I4.b}, rule).value;
}

}  // namespace

double rosenblatt_cumulant(const CumulantSpec& spec, double H) {
  if (!(H > 0.5 && H < 1.0)) throw PreconditionError("cumulant: H must lie in (1/2, 1)");
  const int k = spec.order;
  if (k < 2 || k > 4) throw PreconditionError("cumulant: order must be 2, 3 or 4");
  if (spec.intervals.size() != spec.thetas.size())
    throw PreconditionError("cumulant: one theta per interval");
  std::vector<Interval> I;
  std::vector<double> sign;
  for (const auto& [s, t] : spec.intervals) {
    if (!std::isfinite(s) || !std::isfinite(t)) throw PreconditionError("cumulant: infinite interval");
    I.push_back({std::min(s, t), std::max(s, t)});
    sign.push_back(t >= s ? 1.0 : -1.0);
  }
  const double p = H - 1.0;
  const double sigma = std::sqrt(H * (2.0 * H - 1.0) / 2.0);
  const std::size_t n = I.size();

  double total = 0.0;
  std::vector<std::size_t> r(static_cast<std::size_t>(k), 0);
  while (true) {
    double w = 1.0;
    bool degenerate = false;
    for (std::size_t i : r) {
      w *= spec.thetas[i] * sign[i];
      degenerate = degenerate || I[i].a == I[i].b;
    }
    if (w != 0.0 && !degenerate) {
      double S = 0.0;
      if (k == 2)
        S = S2(I[r[0]], I[r[1]], p);
      else if (k == 3)
        S = S3(I[r[0]], I[r[1]], I[r[2]], p);
      else
        S = S4(I[r[0]], I[r[1]], I[r[2]], I[r[3]], p);
      total += w * S;
    }
    std::size_t pos = 0;
    while (pos < r.size() && ++r[pos] == n) r[pos++] = 0;
    if (pos == r.size()) break;
  }
  return std::pow(2.0, k - 1) * std::tgamma(static_cast<double>(k)) * std::pow(sigma, k) * total;
}

}  // namespace volterra
