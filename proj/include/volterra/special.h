#pragma once

namespace volterra::special {

/// log B(a, b) for a, b > 0, computed through lgamma to avoid overflow.
double log_beta(double a, double b);
double beta(double a, double b);

/// Gauss hypergeometric function 2F1(a, b; c; z) for real z < 1.
///
/// |z| <= 1/2 uses the Gauss series directly. z in (1/2, 1) goes through the
/// 1 - z connection formula; when c - a - b is an integer the logarithmic
/// (digamma) form of that formula is used. z < -1/2 is first mapped into
/// (0, 1) with the Pfaff transformation. c - a - b within 1e-9 of an integer
/// is treated as that integer; just outside that band the generic connection
/// formula loses digits to cancellation.
///
/// Throws PreconditionError when c is a non-positive integer or z >= 1, and
/// NumericError when a series fails to converge.
double hyp2f1(double a, double b, double c, double z);

/// 2F1(a, b; c; 1 - w) for w in (0, 1], without forming 1 - w.
double hyp2f1_complement(double a, double b, double c, double w);

/// 2F1 at z = 1 by Gauss summation, valid when c - a - b > 0.
double hyp2f1_at_one(double a, double b, double c);

/// lim_{z->1-} 2F1(a,b;a+b;z) / (-log(1-z)) = Gamma(a+b) / (Gamma(a) Gamma(b)).
double hyp2f1_log_limit(double a, double b);

/// lim_{z->1-} 2F1(a,b;c;z) / (1-z)^{c-a-b} for c - a - b < 0
/// = Gamma(c) Gamma(a+b-c) / (Gamma(a) Gamma(b)).
double hyp2f1_power_limit(double a, double b, double c);

}  // namespace volterra::special
