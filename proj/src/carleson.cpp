#include "bergman/carleson.hpp"

#include "bergman/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace bergman {

IOmegaQuery make_iomega_query(double sigma, double gamma, double omega,
                              const SpaceParams& params) {
    if (!(sigma > -1.0) || !(gamma > -1.0))
        throw std::domain_error("i_omega: sigma, gamma > -1 required");
    if (!jalpha_member(params))
        throw std::domain_error("i_omega: Q has zeros in the disk for these parameters");
    return IOmegaQuery{sigma, gamma, omega, params};
}

double i_omega(const IOmegaQuery& query, Complex z, const IOmegaConfig& cfg) {
    const double t = std::abs(z);  // rotation invariance: only |z| matters
    if (t > 0.995) throw accuracy_error("i_omega: |z| > 0.995 exceeds the accuracy cap");

    const double closeness = 1.0 - t;
    const int nr = cfg.n_radial > 0
                       ? cfg.n_radial
                       : std::min(700, std::max(200, static_cast<int>(24.0 / closeness)));
    const int nth = cfg.n_angular > 0
                        ? cfg.n_angular
                        : std::min(4096, std::max(256, static_cast<int>(20.0 / closeness)));

    const Rule1D rad = gauss_jacobi01(nr, query.sigma, query.gamma);
    KernelEval eval(query.params);
    const double expo = 2.0 + query.sigma + query.omega;

    double total = 0.0;
    for (int i = 0; i < nr; ++i) {
        const double rw = std::sqrt(rad.x[i]);
        double ring = 0.0;
        for (int j = 0; j < nth; ++j) {
            const double th = 2.0 * M_PI * j / nth;
            const Complex xi = t * rw * Complex(std::cos(th), -std::sin(th));
            const double q = std::abs(eval.Q(xi));
            ring += q / std::pow(std::abs(1.0 - xi), expo);
        }
        total += rad.w[i] * ring / nth;
    }
    return total;
}

RegimeFit regime_fit(const std::vector<std::pair<double, double>>& path_values, double omega) {
    RegimeFit fit;
    if (path_values.size() < 5) return fit;  // degenerate: no verdict
    std::vector<double> x, y, u, vals;
    for (const auto& [r, v] : path_values) {
        if (!(v > 0.0) || !std::isfinite(v) || !(r > 0.0) || !(r < 1.0)) return fit;
        u.push_back(1.0 - r * r);
        x.push_back(-std::log(u.back()));
        y.push_back(std::log(v));
        vals.push_back(v);
    }
    const auto n = static_cast<Eigen::Index>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sx += x[k];
        sy += y[k];
        sxx += x[k] * x[k];
        sxy += x[k] * y[k];
    }
    fit.raw_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    // the finite-window corrections enter at order u^min(1, omega), with a
    // possible logarithm; fitting them out debiases the exponent
    const double p = std::min(1.0, omega > 0.0 ? omega : 1.0);
    MatrixXd design(n, 4);
    VectorXd rhs(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double up = std::pow(u[k], p);
        design(k, 0) = 1.0;
        design(k, 1) = x[k];
        design(k, 2) = up;
        design(k, 3) = up * std::log(u[k]);
        rhs(k) = y[k];
    }
    fit.fitted_exponent = design.colPivHouseholderQr().solve(rhs)(1);

    // affine model I = c log(1/(1-t)) + c0 for the logarithmic regime
    MatrixXd affine(n, 2);
    for (Eigen::Index k = 0; k < n; ++k) {
        affine(k, 0) = 1.0;
        affine(k, 1) = x[k];
    }
    VectorXd ivals = Eigen::Map<const VectorXd>(vals.data(), n);
    const VectorXd ac = affine.colPivHouseholderQr().solve(ivals);
    fit.log_intercept = ac(0);
    fit.log_coefficient = ac(1);

    const std::size_t tail = x.size() / 2;
    double bmin = 1e300, bmax = 0.0, lmin = 1e300, lmax = -1e300;
    for (std::size_t k = tail; k < vals.size(); ++k) {
        bmin = std::min(bmin, vals[k]);
        bmax = std::max(bmax, vals[k]);
        const double ratio = (vals[k] - fit.log_intercept) / x[k];
        lmin = std::min(lmin, ratio);
        lmax = std::max(lmax, ratio);
    }
    fit.bounded_ratio = bmax / bmin;
    fit.log_ratio_stability = (lmin > 0.0) ? lmax / lmin - 1.0 : 1e300;

    if (omega < 0.0) {
        fit.verdict = RegimeVerdict::Bounded;
        fit.consistent = fit.bounded_ratio <= 2.0;
    } else if (omega == 0.0) {
        fit.verdict = RegimeVerdict::Logarithmic;
        fit.consistent = fit.log_ratio_stability <= 0.10;
    } else {
        fit.verdict = RegimeVerdict::PowerLaw;
        fit.consistent = std::abs(fit.fitted_exponent - omega) <= 0.05 * std::max(1.0, omega);
    }
    if (!fit.consistent && fit.verdict != RegimeVerdict::Degenerate)
        fit.verdict = RegimeVerdict::Inconsistent;
    return fit;
}

double averaging(const SymbolFunction& phi, Complex z, double r, const SpaceParams& params) {
    BergmanDisc disc(params, z, r);
    const double mu = disc.measure();
    if (!(mu > 0.0)) throw std::domain_error("averaging: disc has no mass");
    const double num = disc.integral_mu([&](Complex w) { return phi(w).real(); });
    return num / mu;
}

double measure_of_disc(const BorelMeasure& nu, const BergmanDisc& disc) {
    double total = 0.0;
    if (nu.has_density())
        total += disc.integral_area([&](Complex w) { return nu.density(w); });
    for (const Atom& a : nu.atoms)
        if (disc.contains(a.point, /*closed_boundary=*/true)) total += a.mass;
    return total;
}

double averaging(const BorelMeasure& nu, Complex z, double r, const SpaceParams& params) {
    BergmanDisc disc(params, z, r);
    const double mu = disc.measure();
    if (!(mu > 0.0)) throw std::domain_error("averaging: disc has no mass");
    return measure_of_disc(nu, disc) / mu;
}

RatioSup carleson_ratio_sup(const BorelMeasure& nu, double r, const SpaceParams& params,
                            const std::vector<Complex>& centers) {
    RatioSup out;
    for (const Complex& z : centers) {
        if (std::abs(z) > 0.99)
            throw std::domain_error("carleson_ratio_sup: centers must satisfy |z| <= 0.99");
        BergmanDisc disc(params, z, r);
        RatioRow row;
        row.center = z;
        row.mu_disc = disc.measure();
        row.nu_disc = measure_of_disc(nu, disc);
        row.ratio = row.nu_disc / row.mu_disc;
        if (row.ratio > out.sup) {
            out.sup = row.ratio;
            out.argmax = z;
        }
        out.table.push_back(row);
    }
    return out;
}

VanishingProfile vanishing_profile(const BorelMeasure& nu, double r, const SpaceParams& params,
                                   const std::vector<double>& radii) {
    VanishingProfile out;
    for (double cr : radii) {
        if (!(cr >= 0.0) || cr > 0.99)
            throw std::domain_error("vanishing_profile: radii must lie in [0, 0.99]");
        BergmanDisc disc(params, Complex(cr, 0.0), r);
        out.table.push_back({cr, measure_of_disc(nu, disc) / disc.measure()});
    }
    if (out.table.size() >= 2) {
        const double first = out.table.front().ratio;
        const double last = out.table.back().ratio;
        bool monotone = true;
        for (std::size_t k = 1; k < out.table.size(); ++k)
            if (out.table[k].ratio > out.table[k - 1].ratio * 1.05 + 1e-12) monotone = false;
        out.vanishing_consistent = monotone && last < 0.1 * first;
    }
    return out;
}

FnProbeReport f_n_probe(const SpaceParams& params, double a, double b, int N, double p) {
    if (N < 1) throw std::invalid_argument("f_n_probe: N >= 1 required");
    if (!(p >= 1.0)) throw std::domain_error("f_n_probe: p >= 1 required");
    if (!(a > -1.0) || !(b > -1.0)) throw std::domain_error("f_n_probe: a, b > -1 required");

    FnProbeReport rep;
    rep.probe_exponent = N;
    rep.predicate = projection_bounded({p, params.alpha, params.beta, a, b});

    // inner integral: B f_N(r) = r^{-m} I(r) / Beta(a+1, b+1), where I is the
    // boundary integral with sigma' = N + alpha, gamma' = beta - m/2 and
    // denominator exponent 2 + alpha (omega' = -N, the bounded regime)
    const IOmegaQuery inner = make_iomega_query(
        N + params.alpha, params.beta - 0.5 * params.m, -static_cast<double>(N), params);
    const double bnorm = beta(a + 1.0, b + 1.0);
    // omega' = -N is the bounded regime: the (1-|w|^2)^(N+alpha) numerator
    // suppresses the boundary peak, so fixed moderate rule sizes suffice
    const IOmegaConfig inner_cfg{200, 512};
    auto bf = [&](double r) {
        return std::pow(r, -static_cast<double>(params.m)) *
               i_omega(inner, Complex(r, 0.0), inner_cfg) / bnorm;
    };
    // outer integrand of ||B f_N||_p^p against dmu_{a,b}
    auto outer = [&](double r) {
        return 2.0 * std::pow(bf(r), p) * std::pow(1.0 - r * r, a) *
               std::pow(r, 2.0 * b + 1.0) / bnorm;
    };

    const int kSteps = 5;
    const Rule1D leg = gauss_jacobi01(12, 0.0, 0.0);
    auto segment = [&](double lo, double hi) {
        double sum = 0.0;
        for (int i = 0; i < leg.x.size(); ++i)
            sum += leg.w[i] * outer(lo + (hi - lo) * leg.x[i]);
        return (hi - lo) * sum;
    };

    double eps = 0.25, outer_r = 0.9;
    double value = segment(eps, outer_r);
    rep.ladder.push_back({eps, outer_r, value});
    for (int k = 1; k < kSteps; ++k) {
        const double eps_next = eps * 0.5;
        const double outer_next = 1.0 - (1.0 - outer_r) * 0.5;
        value += segment(eps_next, eps) + segment(outer_r, outer_next);
        eps = eps_next;
        outer_r = outer_next;
        rep.ladder.push_back({eps, outer_r, value});
    }

    // tail growth in log2 per step
    std::vector<double> growth;
    for (std::size_t k = rep.ladder.size() - 3; k + 1 < rep.ladder.size(); ++k)
        growth.push_back(std::log2(rep.ladder[k + 1].value / rep.ladder[k].value));
    rep.growth_exponent = 0.5 * (growth[0] + growth[1]);
    rep.bounded = rep.ladder.back().value / rep.ladder[rep.ladder.size() - 2].value < 1.05;
    return rep;
}

} // namespace bergman
