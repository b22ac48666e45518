#pragma once

#include "bergman/types.hpp"

#include <functional>

namespace bergman {

/// One-dimensional Gauss rule: nodes x and weights w.
struct Rule1D {
    ArrayXd x;
    ArrayXd w;
};

/// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on [-1, 1],
/// built by Golub-Welsch on the Jacobi recurrence matrix.
Rule1D gauss_jacobi(int n, double a, double b);

/// Gauss rule for the weight (1-u)^a u^b on [0, 1] (the radial variable
/// u = r^2 of the disk measure).
Rule1D gauss_jacobi01(int n, double a, double b);

/// Evaluable integrand on the punctured disk with a declared pole order at
/// the origin (|f(z)| = O(|z|^-pole_order) as z -> 0).
struct DiskFunction {
    std::function<Complex(Complex)> f;
    int pole_order = 0;

    DiskFunction() = default;
    DiskFunction(std::function<Complex(Complex)> fn, int pole = 0)
        : f(std::move(fn)), pole_order(pole) {}

    Complex operator()(Complex z) const { return f(z); }
};

/// Polar quadrature rule realizing  integral_D . dmu_{alpha,beta}.
///
/// Radially this is Gauss-Jacobi in u = r^2 for the weight (1-u)^alpha u^beta0
/// with the remaining u^m folded into the weights, so that monomial moments
/// |z|^(2(k-m)) are integrated exactly for every k >= 0. Angularly it is the
/// n_theta-point trapezoid rule, exact for e^(i k theta) with |k| < n_theta.
class DiskRule {
public:
    DiskRule(const SpaceParams& params, int n_radial, int n_angular);

    const SpaceParams& params() const { return params_; }
    int n_radial() const { return static_cast<int>(u_.size()); }
    int n_angular() const { return n_theta_; }

    const ArrayXd& radial_u() const { return u_; }        // u_i = r_i^2 in (0,1)
    const ArrayXd& radial_r() const { return r_; }
    const ArrayXd& radial_weight() const { return w_; }   // includes 1/B and u^m
    const ArrayXcd& angular_unit() const { return unit_; }

    Complex node(int i, int j) const { return r_[i] * unit_[j]; }

    /// Flattened nodes / weights, index = i * n_angular + j.
    ArrayXcd nodes() const;
    ArrayXd node_weights() const;

    Complex integrate(const DiskFunction& f) const;
    Complex inner_product(const DiskFunction& f, const DiskFunction& g) const;
    double norm_p(const DiskFunction& f, double p) const;

private:
    SpaceParams params_;
    ArrayXd u_, r_, w_;
    int n_theta_;
    ArrayXcd unit_;
};

DiskRule build_rule(const SpaceParams& params, int n_radial, int n_angular);

inline Complex integrate(const DiskFunction& f, const DiskRule& rule) {
    return rule.integrate(f);
}
inline Complex inner_product(const DiskFunction& f, const DiskFunction& g, const DiskRule& rule) {
    return rule.inner_product(f, g);
}
inline double norm_p(const DiskFunction& f, const SpaceParams& params, const DiskRule& rule) {
    return rule.norm_p(f, params.p);
}

/// Monte Carlo estimate with its standard error.
struct McEstimate {
    Complex value;
    double std_error = 0.0;
};

/// Importance-sampled Monte Carlo for integral f dmu_{alpha,beta}:
/// r^2 ~ Beta(beta+1, alpha+1), theta uniform. Independent of DiskRule.
McEstimate mc_integrate(const DiskFunction& f, const SpaceParams& params,
                        long samples, std::uint64_t seed);

} // namespace bergman
