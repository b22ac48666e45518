#pragma once

#include "bergman/quadrature.hpp"
#include "bergman/types.hpp"

#include <string>

namespace bergman {

/// One mixed term conj(z)^s z^(t-m) of the projection corpus.
struct MonomialTerm {
    int s = 0;
    int t = 0;
    Complex coefficient{1.0, 0.0};
};

struct MonomialProjection {
    double coefficient = 0.0;
    int exponent = 0;  // power of z relative to nothing, i.e. z^exponent
};

/// ||z^(k-m)||^2_{alpha,beta,2} = B(alpha+1, k+beta0+1) / B(alpha+1, beta+1).
double monomial_norm_sq(const SpaceParams& params, int k);

/// Closed-form action of the orthogonal projection on conj(z)^s z^(t-m):
/// coefficient (alpha+beta0+t+2)_{-s} / (beta0+t+1)_{-s} on z^(t-s-m) when
/// t >= s, and zero when t < s.
MonomialProjection project_monomial(const SpaceParams& params, int s, int t);

/// Quadrature projection: coefficients a_k against the monomials z^(k-m),
/// a_k = <f, z^(k-m)> / ||z^(k-m)||^2, k = 0 .. basis_size-1.
VectorXcd project(const DiskFunction& f, const SpaceParams& params, const DiskRule& rule,
                  int basis_size);

/// Evaluate sum_k a_k z^(k-m).
Complex eval_series(const VectorXcd& a, const SpaceParams& params, Complex z);

/// Squared norm || P(conj(z)^s sum_k a_k z^(k-m)) ||^2 in the proof's final
/// form: sum_{k>=s} [B(alpha+1,k-s+beta0+1)/B(alpha+1,beta+1)] *
/// [(alpha+beta0+k+2)_{-s}/(beta0+k+1)_{-s}]^2 |a_k|^2.
double norm_of_projected_series(const SpaceParams& params, int s, const VectorXcd& a);

/// The two candidate prefactors of the series-norm display, emitted side by
/// side for inspection: the Beta ratio that the proof's computation yields,
/// and the Pochhammer ratio as printed (with the display's stray index read
/// as the summation index k).
double proof_form_prefactor(const SpaceParams& params, int s, int k);
double stated_display_prefactor(const SpaceParams& params, int s, int k);

/// Boundedness of the projection with kernel parameters (alpha, beta) acting
/// on the space weighted by (a, b), in L^p.
struct BoundednessQuery {
    double p = 2.0;
    double alpha = 0.0;
    double beta = 0.0;
    double a = 0.0;
    double b = 0.0;
};

struct BoundednessVerdict {
    bool bounded = false;
    std::string reason;
};

BoundednessVerdict projection_bounded(const BoundednessQuery& query);

/// Largest admissible pole order at the origin:
/// floor(2(beta+1)/p) when 2(beta+1)/p is not an integer, else 2(beta+1)/p - 1.
int pole_order_bound(double p, double beta);

} // namespace bergman
