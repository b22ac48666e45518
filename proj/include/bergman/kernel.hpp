#pragma once

#include "bergman/quadrature.hpp"
#include "bergman/types.hpp"

#include <functional>
#include <utility>

namespace bergman {

/// H_{alpha,beta}(t) = beta * sum_{n>=0} (-1)^n/(n+beta) C(alpha+1, n) t^n,
/// for alpha, beta > -1 and |t| <= 1. The beta = 0 case is the limit H == 1.
/// For integer alpha the sum is finite (alpha + 2 terms) and exact; otherwise
/// the series is truncated when a tail bound drops below tol.
double H(double alpha, double beta, double t, double tol = 1e-13);
Complex H(double alpha, double beta, Complex t, double tol = 1e-13);

/// Derivative H'_{alpha,beta}(t) of the series above.
double H_derivative(double alpha, double beta, double t, double tol = 1e-13);
Complex H_derivative(double alpha, double beta, Complex t, double tol = 1e-13);

/// | t H'(t) - beta((1-t)^(alpha+1) - H(t)) |, reported for testing.
double H_prime_identity_residual(double alpha, double beta, double t);

/// Kernel evaluator bound to one parameter set. Holds the constants of the
/// unified formula Q(xi) = [B(a+1,b+1)/B(a+1,b0+1)] H_{a,b0}(xi) and the
/// series truncation tolerance.
class KernelEval {
public:
    explicit KernelEval(const SpaceParams& params, double tail_tol = 1e-13);

    const SpaceParams& params() const { return params_; }
    double tail_tol() const { return tol_; }

    double Q(double xi) const;
    Complex Q(Complex xi) const;

    /// K(w, z) = Q(xi) / (xi^m (1-xi)^(2+alpha)), xi = w * conj(z).
    Complex K(Complex w, Complex z) const;

    /// K(z, z) > 0 on the punctured disk (and at 0 when m = 0).
    double K_diag(Complex z) const;
    double log_K_diag(Complex z) const;

private:
    SpaceParams params_;
    double tol_;
    double ratio_;  // B(alpha+1, beta+1) / B(alpha+1, beta0+1)
};

inline Complex Q(const SpaceParams& params, Complex xi) { return KernelEval(params).Q(xi); }
inline Complex kernel_K(const SpaceParams& params, Complex w, Complex z) {
    return KernelEval(params).K(w, z);
}

/// Winding number of f along the circle |xi| = radius, by trapezoid phase
/// accumulation with adaptive refinement until the count stabilizes to an
/// integer within 1e-3.
int winding_number(const std::function<Complex(Complex)>& f, double radius);

/// Number of zeros of xi -> Q(xi) in {|xi| < radius}, radius in (0,1).
/// Pre-checks min |Q| > 1e-10 on a dense circle grid and reports the
/// offending angle otherwise.
int zero_count_Q(const SpaceParams& params, double radius);

/// Numerical zero-freeness of Q up to |xi| < radius (membership in the
/// zero-free parameter set; a computation, not a theorem).
bool jalpha_member(const SpaceParams& params, double radius = 0.999);

/// Bisection bracket [lo, hi] for the zero-freeness threshold in beta0:
/// Q_{alpha, lo} has a zero inside radius, Q_{alpha, hi} does not.
std::pair<double, double> jalpha_bracket(double alpha, double radius = 0.999,
                                         double tol = 1e-3);

} // namespace bergman
