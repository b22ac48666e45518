#pragma once

#include "bergman/types.hpp"

namespace bergman {

/// ln Gamma(x) for x > 0. Lanczos approximation (g = 7, 9 terms),
/// relative error below 1e-13 on (0, 50].
double log_gamma(double x);

/// Euler beta function B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b), a, b > 0.
double beta(double a, double b);

/// ln B(a, b); symmetric in (a, b) by construction.
double log_beta(double a, double b);

/// Pochhammer symbol (a)_n = Gamma(a+n)/Gamma(a).
/// n >= 0 is evaluated as the literal product a(a+1)...(a+n-1);
/// n < 0 goes through the Gamma ratio and requires a > 0 and a + n > 0.
double pochhammer(double a, long n);

/// Generalized binomial coefficient C(u, n) = u(u-1)...(u-n+1)/n!, n >= 0.
/// Exact for integer u with u <= ~30 (integer intermediates).
double gen_binomial(double u, int n);

/// Gauss hypergeometric series 2F1(a, b; c; xi) by direct summation.
/// Requires |xi| <= 0.95 (an accuracy_error tells the caller to use the
/// factored kernel form beyond that) and c away from nonpositive integers.
Complex hyp2f1(double a, double b, double c, Complex xi);

} // namespace bergman
