#include "bergman/projection.hpp"

#include "bergman/specfun.hpp"

#include <cmath>
#include <cstdio>

namespace bergman {

double monomial_norm_sq(const SpaceParams& params, int k) {
    if (k < 0) throw std::domain_error("monomial_norm_sq: k >= 0 required");
    return std::exp(log_beta(params.alpha + 1.0, k + params.beta0 + 1.0) -
                    log_beta(params.alpha + 1.0, params.beta + 1.0));
}

MonomialProjection project_monomial(const SpaceParams& params, int s, int t) {
    if (s < 0 || t < 0) throw std::domain_error("project_monomial: s, t >= 0 required");
    MonomialProjection out;
    out.exponent = t - s - params.m;
    if (t < s) {
        out.coefficient = 0.0;
        return out;
    }
    const double num = pochhammer(params.alpha + params.beta0 + t + 2.0, -s);
    const double den = pochhammer(params.beta0 + t + 1.0, -s);
    out.coefficient = num / den;
    return out;
}

VectorXcd project(const DiskFunction& f, const SpaceParams& params, const DiskRule& rule,
                  int basis_size) {
    if (basis_size < 1) throw std::invalid_argument("project: basis_size >= 1 required");
    if (!(f.pole_order + params.m < 2.0 * params.beta + 2.0))
        throw std::domain_error("project: integrand not integrable against the lowest basis power");

    const auto& u = rule.radial_u();
    const auto& r = rule.radial_r();
    const auto& w = rule.radial_weight();
    const auto& unit = rule.angular_unit();
    const int nth = rule.n_angular();
    const int N = basis_size;

    // c_k = sum_nodes w * f(z) * conj(z)^(k-m), accumulated ring by ring
    VectorXcd coeff = VectorXcd::Zero(N);
    VectorXcd ring(N);
    for (int i = 0; i < u.size(); ++i) {
        ring.setZero();
        for (int j = 0; j < nth; ++j) {
            const Complex z = r[i] * unit[j];
            const Complex v = f(z);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                char buf[96];
                std::snprintf(buf, sizeof(buf), "project: non-finite value at node (%g, %g)",
                              z.real(), z.imag());
                throw accuracy_error(buf);
            }
            Complex zb = std::conj(z);
            Complex p = 1.0;
            for (int k = 0; k < params.m; ++k) p /= zb;  // conj(z)^(-m)
            for (int k = 0; k < N; ++k) {
                ring[k] += v * p;
                p *= zb;
            }
        }
        coeff += (w[i] / nth) * ring;
    }
    for (int k = 0; k < N; ++k) coeff[k] /= monomial_norm_sq(params, k);
    return coeff;
}

Complex eval_series(const VectorXcd& a, const SpaceParams& params, Complex z) {
    Complex p = 1.0;
    for (int k = 0; k < params.m; ++k) p /= z;
    Complex sum(0.0, 0.0);
    for (int k = 0; k < a.size(); ++k) {
        sum += a[k] * p;
        p *= z;
    }
    return sum;
}

double proof_form_prefactor(const SpaceParams& params, int s, int k) {
    return std::exp(log_beta(params.alpha + 1.0, k - s + params.beta0 + 1.0) -
                    log_beta(params.alpha + 1.0, params.beta + 1.0));
}

double stated_display_prefactor(const SpaceParams& params, int s, int k) {
    // (beta+1)_{k-s-m} / (alpha+beta+2)_{k-s-m}
    const long n = k - s - params.m;
    return pochhammer(params.beta + 1.0, n) / pochhammer(params.alpha + params.beta + 2.0, n);
}

double norm_of_projected_series(const SpaceParams& params, int s, const VectorXcd& a) {
    if (s < 0) throw std::domain_error("norm_of_projected_series: s >= 0 required");
    double sum = 0.0;
    for (int k = s; k < a.size(); ++k) {
        const double ratio = project_monomial(params, s, k).coefficient;
        sum += proof_form_prefactor(params, s, k) * ratio * ratio * std::norm(a[k]);
    }
    return sum;
}

BoundednessVerdict projection_bounded(const BoundednessQuery& query) {
    if (!(query.alpha > -1.0) || !(query.beta > -1.0) || !(query.a > -1.0) || !(query.b > -1.0))
        throw std::domain_error("projection_bounded: all weight parameters must exceed -1");
    if (!(query.p >= 1.0)) throw std::domain_error("projection_bounded: p >= 1 required");

    const double p = query.p;
    const int m = static_cast<int>(std::ceil(query.beta));
    BoundednessVerdict v;
    char buf[160];

    if (!(p * (query.alpha + 1.0) > query.a + 1.0)) {
        std::snprintf(buf, sizeof(buf), "p(alpha+1) = %g <= a+1 = %g",
                      p * (query.alpha + 1.0), query.a + 1.0);
        v.reason = buf;
        return v;
    }
    const double twob = 2.0 * query.b;
    if (p == 1.0) {
        if (!(m - 2.0 < twob)) {
            std::snprintf(buf, sizeof(buf), "2b = %g <= m-2 = %g (p = 1)", twob, m - 2.0);
            v.reason = buf;
            return v;
        }
        if (!(twob <= 2.0 * query.beta - m)) {
            std::snprintf(buf, sizeof(buf), "2b = %g > 2beta-m = %g (p = 1)", twob,
                          2.0 * query.beta - m);
            v.reason = buf;
            return v;
        }
    } else {
        if (!(p * m - 2.0 < twob)) {
            std::snprintf(buf, sizeof(buf), "2b = %g <= pm-2 = %g", twob, p * m - 2.0);
            v.reason = buf;
            return v;
        }
        if (!(twob < p * (2.0 * query.beta + 2.0) - p * m - 2.0)) {
            std::snprintf(buf, sizeof(buf), "2b = %g >= p(2beta+2)-pm-2 = %g", twob,
                          p * (2.0 * query.beta + 2.0) - p * m - 2.0);
            v.reason = buf;
            return v;
        }
    }
    v.bounded = true;
    v.reason = "all inequalities hold";
    return v;
}

int pole_order_bound(double p, double beta) {
    if (!(p >= 1.0)) throw std::domain_error("pole_order_bound: p >= 1 required");
    if (!(beta > -1.0)) throw std::domain_error("pole_order_bound: beta > -1 required");
    const double x = 2.0 * (beta + 1.0) / p;
    const double r = std::round(x);
    if (std::abs(x - r) < 1e-12 * std::max(1.0, std::abs(x)))
        return static_cast<int>(r) - 1;
    return static_cast<int>(std::floor(x));
}

} // namespace bergman
