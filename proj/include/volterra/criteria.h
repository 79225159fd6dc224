#pragma once

#include <string>
#include <vector>

namespace volterra::criteria {

/// Left-shift example: phi(xi) = (xi + 1)^(-beta) driven by scalar fBm.
struct ShiftExample {
  double beta = 2.0;
  double H = 0.75;

  ShiftExample(double beta, double H);
  double alpha() const { return H - 0.5; }
};

/// Dirichlet Laplacian on the unit box [0,1]^d: lambda_n = pi^2 |n|^2.
struct HeatExample {
  int d = 1;
  double H = 0.75;

  HeatExample(int d, double H);
};

/// 2F1(a, b; c; z) for z < 1, and at z = 1 when c - a - b > 0.
double gauss_2f1(double a, double b, double c, double z);

struct JValue {
  bool divergent = false;
  double value = 0.0;        // J when finite
  double xi_factor = 0.0;    // int_1^inf xi^(2H - 2 beta) d xi (inf when divergent)
  double z_integral = 0.0;   // int_0^1 z^(2H-2) 2F1(beta, 2H; 2 beta; z) dz
};

/// J(beta, H) from the Gamma / 2F1 product. Requires beta > H.
JValue j_closed_form(double beta, double H);

struct JQuadrature {
  double value = 0.0;     // head over u, v < truncation plus the power-law tail estimate
  double head = 0.0;
  double tail = 0.0;      // estimated contribution of u > truncation
  double error = 0.0;     // quadrature error estimate plus |tail| / 10
  double truncation = 0.0;
  bool converged = false; // false when beta <= H + 1/2: the head grows with the truncation
};

/// Nested quadrature of J(beta, H) = int int (int (u+xi+1)^-b (v+xi+1)^-b dxi) |u-v|^(2H-2).
JQuadrature j_quadrature(double beta, double H, double truncation = 1e4);

struct ShiftVerdict {
  double beta = 0.0;
  double H = 0.0;
  bool limiting_measure = false;  // fBm driver: beta > H + 1/2
  bool wiener_limit = false;      // Wiener driver: beta > 1
  double sup_trace = 0.0;         // H (2H - 1) J(beta, H), inf when divergent
  std::string note;
};

ShiftVerdict shift_trace_criterion(double beta, double H);

/// theta(r)^d = sum over n in {1..N}^d of exp(-2 pi^2 |n|^2 r); N = 0 means untruncated.
double heat_hs_norm_sq(int d, double r, long N = 0);

struct HeatReport {
  int d = 0;
  double H = 0.0;
  bool admissible = false;       // d < 4H
  double fitted_exponent = 0.0;  // slope of log ||S(r)||_HS^2 against log r
  double expected_exponent = 0.0;
  bool exponent_ok = false;      // |fitted - expected| <= 0.1
  double r_min = 1e-6;
  double r_max = 1e-3;
};

HeatReport heat_admissibility(int d, double H);

/// Hypothesis (H) integral for the heat surrogate truncated to N modes per
/// axis, along a sequence of truncations.
struct HeatTrend {
  std::vector<long> N;
  std::vector<double> value;
  double growth_exponent = 0.0;  // slope of log (V(2N) - V(N)) against log N
  double expected_growth = 0.0;  // d / (2H) - 2, the exponent of V(2N) - V(N)
  bool divergent = false;        // growth_exponent > -0.02
};

HeatTrend heat_hypothesis_trend(int d, double H, const std::vector<long>& N, double T0 = 1.0);

struct ThresholdRow {
  double H = 0.0;
  double beta = 0.0;
  ShiftVerdict verdict;
};

/// Verdicts either side of beta = H + 1/2 and at a few reference betas.
std::vector<ThresholdRow> threshold_table(const std::vector<double>& Hs, double eps = 1e-6);

}  // namespace volterra::criteria
