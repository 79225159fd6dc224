#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace volterra {

/// Triangular kernel K(t, r), zero for t <= r, with
/// |dK/du(u, r)| <= regularity_const * (u - r)^(alpha - 1).
class VolterraKernel {
 public:
  virtual ~VolterraKernel() = default;

  virtual double alpha() const = 0;
  virtual double regularity_const() const = 0;
  /// K(t, r); zero when t <= r.
  virtual double eval(double t, double r) const = 0;
  /// dK/du at (u, r) for u > r.
  virtual double deriv(double u, double r) const = 0;
  /// dK/du at (u, u - lag). Quadrature near the singular endpoint goes
  /// through this form since u - lag loses the lag once it drops below ulp(u).
  virtual double deriv_lag(double u, double lag) const { return deriv(u, u - lag); }

  /// phi as a function of the gap |u - v| when the kernel is shift invariant
  /// and a closed form is known. `lo` is min(u, v).
  virtual std::optional<double> phi_closed(double lo, double gap) const {
    (void)lo;
    (void)gap;
    return std::nullopt;
  }
  /// Closed form of R(s1, t1, s2, t2), if known.
  virtual std::optional<double> cov_closed(double s1, double t1, double s2, double t2) const {
    (void)s1, (void)t1, (void)s2, (void)t2;
    return std::nullopt;
  }
};

/// Kernel of the two-sided fractional Brownian motion,
/// K(t, r) = C_H (t - r)^(H - 1/2).
class FbmKernel final : public VolterraKernel {
 public:
  /// Throws PreconditionError unless H in (1/2, 1). `regularity_const`
  /// defaults to the exact constant c_H.
  explicit FbmKernel(double H, std::optional<double> regularity_const = std::nullopt);

  double H() const { return H_; }
  double C_H() const { return C_H_; }
  double c_H() const { return c_H_; }

  double alpha() const override { return H_ - 0.5; }
  double regularity_const() const override { return reg_; }
  double eval(double t, double r) const override;
  double deriv(double u, double r) const override;
  double deriv_lag(double u, double lag) const override;
  std::optional<double> phi_closed(double lo, double gap) const override;
  std::optional<double> cov_closed(double s1, double t1, double s2, double t2) const override;

  static double normalizer(double H);

 private:
  double H_;
  double C_H_;
  double c_H_;
  double reg_;
};

/// Kernel given by callables. Everything goes through quadrature.
class FunctionKernel final : public VolterraKernel {
 public:
  using Fn = std::function<double(double, double)>;
  /// `deriv_lag`, if given, is dK/du as a function of (u, u - r).
  FunctionKernel(double alpha, double regularity_const, Fn eval, Fn deriv, Fn deriv_lag = {});

  double alpha() const override { return alpha_; }
  double regularity_const() const override { return reg_; }
  double eval(double t, double r) const override;
  double deriv(double u, double r) const override;
  double deriv_lag(double u, double lag) const override;

 private:
  double alpha_;
  double reg_;
  Fn eval_;
  Fn deriv_;
  Fn deriv_lag_;
};

/// fBm kernel with closed forms hidden, so the generic quadrature paths are
/// exercised on a kernel with known answers.
std::unique_ptr<VolterraKernel> opaque_fbm_kernel(double H);

struct PhiOptions {
  double rel_tail = 1e-8;   // tail bound relative to the partial value
  double panel_tol = 1e-12;
  int max_doublings = 400;
};

/// phi(u, v) = int_{-inf}^{u^v} dK/du(u, r) dK/dv(v, r) dr, u != v.
/// Uses the kernel's closed form when it has one.
double phi(const VolterraKernel& k, double u, double v);

/// Same integral, always by quadrature. Throws QuadratureError if the tail
/// bound cannot be brought under `rel_tail`.
double phi_quadrature(const VolterraKernel& k, double u, double v, const PhiOptions& opt = {});

/// phi at (lo, lo + gap) with gap > 0; avoids forming lo + gap - lo.
double phi_gap(const VolterraKernel& k, double lo, double gap);

/// int_{a1}^{b1} int_{a2}^{b2} f(u) g(v) phi(u, v) dv du for a1 <= b1, a2 <= b2.
double phi_weighted_integral(const VolterraKernel& k, const std::function<double(double)>& f,
                             double a1, double b1, const std::function<double(double)>& g,
                             double a2, double b2, double tol = 1e-10);

/// R(s1, t1, s2, t2) = int_{s1}^{t1} int_{s2}^{t2} phi. Oriented: swapping an
/// interval's endpoints flips the sign. Closed form when available.
double cov_R(const VolterraKernel& k, double s1, double t1, double s2, double t2);

/// R through the phi double integral regardless of closed forms.
double cov_R_phi(const VolterraKernel& k, double s1, double t1, double s2, double t2);

/// R as int (K(t1,r) - K(s1,r)) (K(t2,r) - K(s2,r)) dr over the real line.
double cov_R_direct(const VolterraKernel& k, double s1, double t1, double s2, double t2);

/// K(t, r) - K(s, r); far below [s, t] it is formed as the integral of dK/du
/// to avoid cancellation between two large values.
double kernel_increment(const VolterraKernel& k, double s, double t, double r);

/// int_{-inf}^{lo} F(r) dr for F decaying like (lo - r)^(2 alpha - 2); `span`
/// sets the scale of the region where F is still far from its asymptote.
double integrate_past(const std::function<double(double)>& F, double lo, double span,
                      double alpha);

/// Constant C in E(b_t - b_s)^2 <= C (t - s)^(1 + 2 alpha):
/// regularity_const^2 B(alpha, 1 - 2 alpha) / (alpha (1 + 2 alpha)).
double increment_bound_const(const VolterraKernel& k);

struct RegularityReport {
  double max_ratio = 0.0;  // max |deriv| (u - r)^(1 - alpha)
  double bound = 0.0;      // regularity_const (1 + tol)
  double worst_u = 0.0;
  double worst_r = 0.0;
  bool pass = false;
};

struct GridPoint {
  double u;
  double r;
};

RegularityReport check_regularity(const VolterraKernel& k, const std::vector<GridPoint>& grid,
                                  double tol = 1e-9);

}  // namespace volterra
