#include "bergman/kernel.hpp"

#include "bergman/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace bergman {

namespace {

constexpr long kSeriesCap = 100000;

// Shared series loop for H and H'. Coefficients are generated on the fly
// (one multiply per term), which keeps evaluation pure and thread-safe.
template <typename T>
T h_series(double alpha, double beta, T t, bool deriv, double tol) {
    if (beta == 0.0) return deriv ? T(0.0) : T(1.0);
    const double tabs = std::abs(t);
    if (tabs > 1.0 + 1e-14) throw std::domain_error("H: |t| <= 1 required");

    T sum = deriv ? T(0.0) : T(1.0);  // n = 0 term of H is beta/beta = 1
    T power(1.0);                     // t^(n-1) for deriv, t^n otherwise
    double binom = 1.0;               // C(alpha+1, n), signed
    for (long n = 1; n <= kSeriesCap; ++n) {
        binom *= (alpha + 2.0 - n) / n;
        if (binom == 0.0) return sum;  // integer alpha: finite sum, exact
        const double cn = beta * ((n % 2 == 0) ? binom : -binom) / (n + beta);
        if (!deriv) power *= t;
        T term = cn * power;
        if (deriv) {
            term *= static_cast<double>(n);
            power *= t;
        }
        sum += term;

        if (n > alpha + 1.0) {
            // |C(alpha+1, k)| decreases beyond alpha+1; bound the tail by a
            // geometric sum for |t| < 1 and an integral comparison at |t| = 1.
            const double cnext = std::abs(binom) * std::abs(alpha + 2.0 - (n + 1.0)) / (n + 1.0);
            const double lead = std::abs(beta) * cnext / n;
            double tail;
            if (tabs < 1.0 - 1e-9) {
                tail = lead * std::pow(tabs, static_cast<double>(n + 1)) / (1.0 - tabs);
            } else {
                tail = std::abs(beta) * cnext * std::pow(1.0 + 1.0 / n, alpha + 2.0) /
                       (alpha + 2.0);
            }
            if (deriv) tail *= static_cast<double>(n + 2);
            if (tail < tol * std::max(std::abs(sum), 0.1)) return sum;
        }
    }
    throw accuracy_error("H: series did not meet the tail bound within the term cap");
}

} // namespace

double H(double alpha, double beta, double t, double tol) {
    return h_series(alpha, beta, t, false, tol);
}
Complex H(double alpha, double beta, Complex t, double tol) {
    return h_series(alpha, beta, t, false, tol);
}
double H_derivative(double alpha, double beta, double t, double tol) {
    return h_series(alpha, beta, t, true, tol);
}
Complex H_derivative(double alpha, double beta, Complex t, double tol) {
    return h_series(alpha, beta, t, true, tol);
}

double H_prime_identity_residual(double alpha, double beta, double t) {
    if (!(std::abs(t) < 1.0)) throw std::domain_error("H_prime_identity_residual: |t| < 1");
    const double lhs = t * H_derivative(alpha, beta, t);
    const double rhs = beta * (std::pow(1.0 - t, alpha + 1.0) - H(alpha, beta, t));
    return std::abs(lhs - rhs);
}

KernelEval::KernelEval(const SpaceParams& params, double tail_tol)
    : params_(params), tol_(tail_tol) {
    if (!(tail_tol > 0.0)) throw std::invalid_argument("KernelEval: tail tolerance > 0");
    ratio_ = std::exp(log_beta(params.alpha + 1.0, params.beta + 1.0) -
                      log_beta(params.alpha + 1.0, params.beta0 + 1.0));
}

double KernelEval::Q(double xi) const {
    if (std::abs(xi) > 1.0 + 1e-14) throw std::domain_error("Q: |xi| <= 1 required");
    return ratio_ * H(params_.alpha, params_.beta0, xi, tol_);
}

Complex KernelEval::Q(Complex xi) const {
    if (std::abs(xi) > 1.0 + 1e-14) throw std::domain_error("Q: |xi| <= 1 required");
    return ratio_ * H(params_.alpha, params_.beta0, xi, tol_);
}

Complex KernelEval::K(Complex w, Complex z) const {
    const Complex xi = w * std::conj(z);
    if (params_.m > 0 && xi == Complex(0.0, 0.0))
        throw std::domain_error("kernel_K: pole at xi = 0 (m > 0)");
    if (std::abs(Complex(1.0, 0.0) - xi) < 1e-12)
        throw accuracy_error("kernel_K: refusing evaluation with |1 - xi| < 1e-12");
    Complex denom = std::pow(Complex(1.0, 0.0) - xi, params_.alpha + 2.0);
    for (int k = 0; k < params_.m; ++k) denom *= xi;
    return Q(xi) / denom;
}

double KernelEval::K_diag(Complex z) const {
    const double t = std::norm(z);
    if (params_.m > 0 && t == 0.0)
        throw std::domain_error("kernel_K: pole at z = 0 (m > 0)");
    if (1.0 - t < 1e-12) throw accuracy_error("kernel_K: diagonal too close to the boundary");
    return Q(t) / (std::pow(t, static_cast<double>(params_.m)) *
                   std::pow(1.0 - t, params_.alpha + 2.0));
}

double KernelEval::log_K_diag(Complex z) const {
    const double t = std::norm(z);
    if (params_.m > 0 && t == 0.0)
        throw std::domain_error("kernel_K: pole at z = 0 (m > 0)");
    if (1.0 - t < 1e-12) throw accuracy_error("kernel_K: diagonal too close to the boundary");
    double val = std::log(Q(t)) - (params_.alpha + 2.0) * std::log1p(-t);
    if (params_.m > 0) val -= params_.m * std::log(t);
    return val;
}

int winding_number(const std::function<Complex(Complex)>& f, double radius) {
    if (!(radius > 0.0) || !(radius < 1.0))
        throw std::domain_error("winding_number: radius in (0,1) required");
    for (int m = 512; m <= (1 << 20); m *= 2) {
        double total = 0.0;
        double max_step = 0.0;
        Complex prev = f(Complex(radius, 0.0));
        bool ok = std::abs(prev) > 0.0;
        for (int k = 1; ok && k <= m; ++k) {
            const double th = 2.0 * M_PI * k / m;
            const Complex cur = f(radius * Complex(std::cos(th), std::sin(th)));
            if (!(std::abs(cur) > 0.0) || !std::isfinite(std::abs(cur))) {
                ok = false;
                break;
            }
            const double step = std::arg(cur / prev);
            max_step = std::max(max_step, std::abs(step));
            total += step;
            prev = cur;
        }
        if (!ok) throw accuracy_error("winding_number: zero or non-finite value on contour");
        const double wind = total / (2.0 * M_PI);
        const double rounded = std::round(wind);
        if (max_step < M_PI / 2.0 && std::abs(wind - rounded) < 1e-3)
            return static_cast<int>(rounded);
    }
    throw accuracy_error("winding_number: phase accumulation did not stabilize");
}

int zero_count_Q(const SpaceParams& params, double radius) {
    KernelEval eval(params);
    // contour safety: Q must stay away from 0 on the circle
    const int probe = 4096;
    for (int k = 0; k < probe; ++k) {
        const double th = 2.0 * M_PI * k / probe;
        const Complex q = eval.Q(radius * Complex(std::cos(th), std::sin(th)));
        if (!(std::abs(q) > 1e-10)) {
            char buf[96];
            std::snprintf(buf, sizeof(buf),
                          "zero_count_Q: |Q| <= 1e-10 on contour at angle %.6f", th);
            throw accuracy_error(buf);
        }
    }
    return winding_number([&](Complex xi) { return eval.Q(xi); }, radius);
}

bool jalpha_member(const SpaceParams& params, double radius) {
    SpaceParams base = params;
    base.beta = params.beta0;  // zero-freeness depends on (alpha, beta0) only
    base.m = 0;
    return zero_count_Q(base, radius) == 0;
}

std::pair<double, double> jalpha_bracket(double alpha, double radius, double tol) {
    auto zero_free = [&](double beta0) {
        SpaceParams sp = make_space(alpha, beta0);
        try {
            return zero_count_Q(sp, radius) == 0;
        } catch (const accuracy_error&) {
            return false;  // zero on (or hugging) the contour: not clean
        }
    };
    double hi = 0.0;  // beta0 = 0: Q constant, zero-free
    double lo = -1.0 + 1e-9;
    if (zero_free(lo)) return {lo, lo};  // zero-free all the way down
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (zero_free(mid) ? hi : lo) = mid;
    }
    return {lo, hi};
}

} // namespace bergman
