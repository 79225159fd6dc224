#include "volterra/special.h"

#include <cmath>

#include <boost/math/special_functions/digamma.hpp>

#include "volterra/error.h"

namespace volterra::special {

namespace {

constexpr int kMaxTerms = 200000;
constexpr double kSeriesEps = 1e-17;
constexpr double kIntegerSlack = 1e-9;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

// 1/Gamma(x), zero at the poles.
double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

double psi(double x) { return boost::math::digamma(x); }

// Plain Gauss series; used for |z| <= 1/2 and for terminating polynomials.
double series(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (term == 0.0 || std::abs(term) <= kSeriesEps * std::abs(sum)) return sum;
  }
  throw NumericError("hyp2f1: series did not converge");
}

// 2F1(a,b;c;1-w) for w in (0, 1/2], c-a-b = m with m an integer.
double log_connection(double a, double b, double c, double w, int m) {
  const double lw = std::log(w);
  if (m == 0) {
    double coef = 1.0;  // (a)_n (b)_n / (n!)^2
    double sum = 0.0;
    for (int n = 0; n < kMaxTerms; ++n) {
      const double term = coef * (2.0 * psi(n + 1.0) - psi(a + n) - psi(b + n) - lw);
      sum += term;
      if (n > 2 && std::abs(term) <= kSeriesEps * std::abs(sum)) {
        return std::tgamma(a + b) * rgamma(a) * rgamma(b) * sum;
      }
      coef *= (a + n) * (b + n) / ((n + 1.0) * (n + 1.0)) * w;
    }
    throw NumericError("hyp2f1: logarithmic series did not converge");
  }
  if (m > 0) {
    double head = 0.0;
    double coef = 1.0;  // (a)_n (b)_n / (n! (1-m)_n)
    for (int n = 0; n < m; ++n) {
      head += coef;
      coef *= (a + n) * (b + n) / ((n + 1.0) * (1.0 - m + n)) * w;
    }
    head *= std::tgamma(static_cast<double>(m)) * std::tgamma(c) * rgamma(a + m) * rgamma(b + m);
    double tail = 0.0;
    coef = 1.0 / std::tgamma(m + 1.0);  // (a+m)_n (b+m)_n / (n! (n+m)!)
    for (int n = 0; n < kMaxTerms; ++n) {
      const double term =
          coef * (lw - psi(n + 1.0) - psi(n + m + 1.0) + psi(a + n + m) + psi(b + n + m));
      tail += term;
      if (n > 2 && std::abs(term) <= kSeriesEps * std::abs(tail)) {
        // (z-1)^m = (-w)^m
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        return head - sign * std::pow(w, m) * std::tgamma(c) * rgamma(a) * rgamma(b) * tail;
      }
      coef *= (a + m + n) * (b + m + n) / ((n + 1.0) * (n + m + 1.0)) * w;
    }
    throw NumericError("hyp2f1: logarithmic series did not converge");
  }
  const int k = -m;  // c = a + b - k
  double head = 0.0;
  double coef = 1.0;  // (a-k)_n (b-k)_n / (n! (1-k)_n)
  for (int n = 0; n < k; ++n) {
    head += coef;
    coef *= (a - k + n) * (b - k + n) / ((n + 1.0) * (1.0 - k + n)) * w;
  }
  head *= std::tgamma(static_cast<double>(k)) * std::tgamma(c) * rgamma(a) * rgamma(b) *
          std::pow(w, -k);
  double tail = 0.0;
  coef = 1.0 / std::tgamma(k + 1.0);
  for (int n = 0; n < kMaxTerms; ++n) {
    const double term =
        coef * (lw - psi(n + 1.0) - psi(n + k + 1.0) + psi(a + n) + psi(b + n));
    tail += term;
    if (n > 2 && std::abs(term) <= kSeriesEps * std::abs(tail)) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      return head - sign * std::tgamma(c) * rgamma(a - k) * rgamma(b - k) * tail;
    }
    coef *= (a + n) * (b + n) / ((n + 1.0) * (n + k + 1.0)) * w;
  }
  throw NumericError("hyp2f1: logarithmic series did not converge");
}

// 2F1(a,b;c;1-w) for w in (0, 1/2].
double complement(double a, double b, double c, double w) {
  const double m = c - a - b;
  const double mr = std::nearbyint(m);
  if (std::abs(m - mr) <= kIntegerSlack) return log_connection(a, b, c, w, static_cast<int>(mr));
  const double first = std::tgamma(c) * std::tgamma(m) * rgamma(c - a) * rgamma(c - b) *
                       series(a, b, 1.0 - m, w);
  const double second = std::pow(w, m) * std::tgamma(c) * std::tgamma(-m) * rgamma(a) *
                        rgamma(b) * series(c - a, c - b, 1.0 + m, w);
  return first + second;
}

void check_c(double c) {
  if (is_nonpositive_integer(c))
    throw PreconditionError("hyp2f1: c must not be a non-positive integer");
}

}  // namespace

double log_beta(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw PreconditionError("beta: arguments must be positive");
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta(double a, double b) { return std::exp(log_beta(a, b)); }

double hyp2f1(double a, double b, double c, double z) {
  check_c(c);
  if (!(z < 1.0)) throw PreconditionError("hyp2f1: z must be below 1; use the limit forms at 1");
  if (z == 0.0) return 1.0;
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) return series(a, b, c, z);
  if (std::abs(z) <= 0.5) return series(a, b, c, z);
  if (z > 0.5) return complement(a, b, c, 1.0 - z);
  // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)), z/(z-1) in (1/3, 1).
  const double zz = z / (z - 1.0);
  const double scale = std::pow(1.0 - z, -a);
  if (zz <= 0.5) return scale * series(a, c - b, c, zz);
  return scale * complement(a, c - b, c, 1.0 / (1.0 - z));
}

double hyp2f1_complement(double a, double b, double c, double w) {
  check_c(c);
  if (!(w > 0.0 && w <= 1.0)) throw PreconditionError("hyp2f1_complement: w must lie in (0, 1]");
  if (w >= 0.5) return hyp2f1(a, b, c, 1.0 - w);
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) return series(a, b, c, 1.0 - w);
  return complement(a, b, c, w);
}

double hyp2f1_at_one(double a, double b, double c) {
  check_c(c);
  if (!(c - a - b > 0.0)) throw PreconditionError("hyp2f1_at_one: requires c - a - b > 0");
  return std::tgamma(c) * std::tgamma(c - a - b) * rgamma(c - a) * rgamma(c - b);
}

double hyp2f1_log_limit(double a, double b) {
  return std::tgamma(a + b) * rgamma(a) * rgamma(b);
}

double hyp2f1_power_limit(double a, double b, double c) {
  check_c(c);
  if (!(c - a - b < 0.0)) throw PreconditionError("hyp2f1_power_limit: requires c - a - b < 0");
  return std::tgamma(c) * std::tgamma(a + b - c) * rgamma(a) * rgamma(b);
}

}  // namespace volterra::special
