#include "bergman/quadrature.hpp"

#include "bergman/specfun.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdio>
#include <random>

namespace bergman {

Rule1D gauss_jacobi(int n, double a, double b) {
    if (n < 1) throw construction_error("gauss_jacobi: need at least one node");
    if (!(a > -1.0) || !(b > -1.0))
        throw construction_error("gauss_jacobi: weight exponents must exceed -1");

    // Jacobi recurrence coefficients (monic convention), Golub-Welsch.
    VectorXd diag(n), sub(std::max(0, n - 1));
    const double ab = a + b;
    diag[0] = (b - a) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double t = 2.0 * k + ab;
        diag[k] = (b * b - a * a) / (t * (t + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        double e2;
        if (k == 1) {
            e2 = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        } else {
            const double t = 2.0 * k + ab;
            e2 = 4.0 * k * (k + a) * (k + b) * (k + ab) /
                 (t * t * (t + 1.0) * (t - 1.0));
        }
        sub[k - 1] = std::sqrt(e2);
    }

    Eigen::SelfAdjointEigenSolver<MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw construction_error("gauss_jacobi: tridiagonal eigensolve failed");

    const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + log_beta(a + 1.0, b + 1.0));
    Rule1D rule;
    rule.x = solver.eigenvalues().array();
    rule.w = mu0 * solver.eigenvectors().row(0).array().square();
    for (int i = 0; i < n; ++i) {
        if (!(rule.x[i] > -1.0) || !(rule.x[i] < 1.0) || !(rule.w[i] > 0.0))
            throw construction_error("gauss_jacobi: invalid node or weight");
    }
    return rule;
}

Rule1D gauss_jacobi01(int n, double a, double b) {
    // map [-1,1] with weight (1-x)^a (1+x)^b onto [0,1] with (1-u)^a u^b
    Rule1D r = gauss_jacobi(n, a, b);
    const double scale = std::exp(-(a + b + 1.0) * std::log(2.0));
    r.x = (r.x + 1.0) * 0.5;
    r.w *= scale;
    return r;
}

DiskRule::DiskRule(const SpaceParams& params, int n_radial, int n_angular)
    : params_(params), n_theta_(n_angular) {
    if (n_radial < 4) throw std::invalid_argument("DiskRule: n_radial >= 4 required");
    if (n_angular < 8) throw std::invalid_argument("DiskRule: n_angular >= 8 required");

    // Radial rule in u = r^2 for the weight (1-u)^alpha u^beta0; the
    // remaining u^m goes into the weights so that every basis power
    // u^(k-m), k >= 0, is handled with polynomial exactness.
    Rule1D rad = gauss_jacobi01(n_radial, params.alpha, params.beta0);
    u_ = rad.x;
    r_ = u_.sqrt();
    const double norm = std::exp(-log_beta(params.alpha + 1.0, params.beta + 1.0));
    w_ = rad.w * u_.pow(static_cast<double>(params.m)) * norm;

    unit_.resize(n_theta_);
    for (int j = 0; j < n_theta_; ++j) {
        const double th = 2.0 * M_PI * j / n_theta_;
        unit_[j] = Complex(std::cos(th), std::sin(th));
    }
}

DiskRule build_rule(const SpaceParams& params, int n_radial, int n_angular) {
    return DiskRule(params, n_radial, n_angular);
}

ArrayXcd DiskRule::nodes() const {
    ArrayXcd z(u_.size() * n_theta_);
    for (int i = 0; i < u_.size(); ++i)
        for (int j = 0; j < n_theta_; ++j) z[i * n_theta_ + j] = r_[i] * unit_[j];
    return z;
}

ArrayXd DiskRule::node_weights() const {
    ArrayXd w(u_.size() * n_theta_);
    for (int i = 0; i < u_.size(); ++i)
        for (int j = 0; j < n_theta_; ++j) w[i * n_theta_ + j] = w_[i] / n_theta_;
    return w;
}

namespace {

[[noreturn]] void bad_node(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "integrate: non-finite value at node (%g, %g)",
                  z.real(), z.imag());
    throw accuracy_error(buf);
}

void check_pole(int pole_order, double beta, double power) {
    if (!(static_cast<double>(pole_order) * power < 2.0 * beta + 2.0))
        throw std::domain_error(
            "integrate: declared pole order makes the integrand non-integrable at 0");
}

} // namespace

Complex DiskRule::integrate(const DiskFunction& f) const {
    check_pole(f.pole_order, params_.beta, 1.0);
    Complex total(0.0, 0.0);
    for (int i = 0; i < u_.size(); ++i) {
        Complex ring(0.0, 0.0);
        for (int j = 0; j < n_theta_; ++j) {
            const Complex z = r_[i] * unit_[j];
            const Complex v = f(z);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) bad_node(z);
            ring += v;
        }
        total += (w_[i] / n_theta_) * ring;
    }
    return total;
}

Complex DiskRule::inner_product(const DiskFunction& f, const DiskFunction& g) const {
    DiskFunction prod([&](Complex z) { return f(z) * std::conj(g(z)); },
                      f.pole_order + g.pole_order);
    return integrate(prod);
}

double DiskRule::norm_p(const DiskFunction& f, double p) const {
    if (!(p >= 1.0)) throw std::domain_error("norm_p: p >= 1 required");
    check_pole(f.pole_order, params_.beta, p);
    double total = 0.0;
    for (int i = 0; i < u_.size(); ++i) {
        double ring = 0.0;
        for (int j = 0; j < n_theta_; ++j) {
            const Complex z = r_[i] * unit_[j];
            const Complex v = f(z);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) bad_node(z);
            ring += std::pow(std::abs(v), p);
        }
        total += (w_[i] / n_theta_) * ring;
    }
    return std::pow(total, 1.0 / p);
}

McEstimate mc_integrate(const DiskFunction& f, const SpaceParams& params,
                        long samples, std::uint64_t seed) {
    if (samples < 10000) throw std::invalid_argument("mc_integrate: need samples >= 1e4");
    std::mt19937_64 gen(seed);
    std::gamma_distribution<double> gb(params.beta + 1.0, 1.0);
    std::gamma_distribution<double> ga(params.alpha + 1.0, 1.0);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);

    Complex sum(0.0, 0.0);
    double sum2_re = 0.0, sum2_im = 0.0;
    for (long k = 0; k < samples; ++k) {
        const double x = gb(gen), y = ga(gen);
        const double u = x / (x + y);  // Beta(beta+1, alpha+1)
        const double th = ang(gen);
        const Complex z = std::sqrt(u) * Complex(std::cos(th), std::sin(th));
        const Complex v = f(z);
        sum += v;
        sum2_re += v.real() * v.real();
        sum2_im += v.imag() * v.imag();
    }
    const double n = static_cast<double>(samples);
    McEstimate est;
    est.value = sum / n;
    const double var_re = std::max(0.0, sum2_re / n - sqr(est.value.real()));
    const double var_im = std::max(0.0, sum2_im / n - sqr(est.value.imag()));
    est.std_error = std::sqrt((var_re + var_im) / n);
    return est;
}

} // namespace bergman
