#include "bergman/operators.hpp"

#include "bergman/specfun.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace bergman {

namespace {

ArrayXcd evaluate_at_nodes(const std::function<Complex(Complex)>& f, const DiskRule& rule) {
    const ArrayXcd z = rule.nodes();
    ArrayXcd v(z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        v[i] = f(z[i]);
        if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
            throw accuracy_error("toeplitz: non-finite symbol value at a rule node");
    }
    return v;
}

MatrixXcd assemble(const MatrixXcd& E, const ArrayXd& w, const ArrayXcd& f) {
    const ArrayXcd wf = w.cast<Complex>() * f;
    return E.adjoint() * wf.matrix().asDiagonal() * E;
}

} // namespace

MatrixXcd basis_matrix(const SpaceParams& params, const DiskRule& rule, int N) {
    const ArrayXcd z = rule.nodes();
    MatrixXcd E(z.size(), N);
    ArrayXd inv_norm(N);
    for (int k = 0; k < N; ++k) inv_norm[k] = 1.0 / std::sqrt(monomial_norm_sq(params, k));
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        Complex p = 1.0;
        for (int k = 0; k < params.m; ++k) p /= z[i];
        for (int k = 0; k < N; ++k) {
            E(i, k) = p * inv_norm[k];
            p *= z[i];
        }
    }
    return E;
}

VectorXcd basis_at(const SpaceParams& params, Complex z, int N) {
    if (params.m > 0 && z == Complex(0.0, 0.0))
        throw std::domain_error("basis_at: pole at z = 0 (m > 0)");
    VectorXcd e(N);
    Complex p = 1.0;
    for (int k = 0; k < params.m; ++k) p /= z;
    for (int k = 0; k < N; ++k) {
        e[k] = p / std::sqrt(monomial_norm_sq(params, k));
        p *= z;
    }
    return e;
}

TruncatedToeplitz toeplitz_matrix(const SymbolFunction& phi, const SpaceParams& params, int N,
                                  const DiskRule& rule) {
    if (N < 1) throw std::invalid_argument("toeplitz_matrix: N >= 1 required");
    TruncatedToeplitz op;
    op.params = params;
    op.N = N;
    op.entries = assemble(basis_matrix(params, rule, N), rule.node_weights(),
                          evaluate_at_nodes(phi.eval, rule));
    return op;
}

TruncatedToeplitz toeplitz_from_measure(const BorelMeasure& nu, const SpaceParams& params, int N,
                                        const DiskRule& rule) {
    if (N < 1) throw std::invalid_argument("toeplitz_from_measure: N >= 1 required");
    TruncatedToeplitz op;
    op.params = params;
    op.N = N;
    op.entries = MatrixXcd::Zero(N, N);

    if (nu.has_density()) {
        // integral e_k conj(e_j) g dA with a plain Legendre-in-u rule
        DiskRule area(make_space(0.0, 0.0), rule.n_radial(), rule.n_angular());
        ArrayXcd g(area.nodes().size());
        const ArrayXcd z = area.nodes();
        for (Eigen::Index i = 0; i < z.size(); ++i) g[i] = Complex(nu.density(z[i]), 0.0);
        op.entries += assemble(basis_matrix(params, area, N), area.node_weights(), g);
    }
    for (const Atom& a : nu.atoms) {
        if (params.m > 0 && a.point == Complex(0.0, 0.0))
            throw std::domain_error("toeplitz_from_measure: atom at the basis pole z = 0");
        if (a.mass < 0.0) throw std::domain_error("toeplitz_from_measure: negative atom mass");
        const VectorXcd e = basis_at(params, a.point, N);
        op.entries += a.mass * (e.conjugate() * e.transpose());
    }
    return op;
}

NormalizedKernel normalized_kernel(const SpaceParams& params, double p, Complex z,
                                   const DiskRule& rule) {
    if (std::abs(z) > 0.995)
        throw accuracy_error("normalized_kernel: |z| > 0.995 exceeds the quadrature accuracy bound");
    if (params.m > 0 && z == Complex(0.0, 0.0))
        throw std::domain_error("normalized_kernel: center at the kernel pole z = 0");
    KernelEval eval(params);
    DiskFunction kz([&eval, z](Complex w) { return eval.K(w, z); }, params.m);
    const double norm = rule.norm_p(kz, p);
    return NormalizedKernel(params, p, z, norm);
}

Complex berezin(const SymbolFunction& phi, const SpaceParams& params, Complex z,
                const DiskRule& rule) {
    NormalizedKernel k2 = normalized_kernel(params, 2.0, z, rule);
    DiskFunction f([&](Complex w) { return phi(w) * std::norm(k2(w)); }, 2 * params.m);
    return rule.integrate(f);
}

Complex berezin(const BorelMeasure& nu, const SpaceParams& params, Complex z,
                const DiskRule& rule) {
    NormalizedKernel k2 = normalized_kernel(params, 2.0, z, rule);
    Complex total(0.0, 0.0);
    if (nu.has_density()) {
        DiskRule area(make_space(0.0, 0.0), rule.n_radial(), rule.n_angular());
        DiskFunction f([&](Complex w) { return Complex(nu.density(w) * std::norm(k2(w)), 0.0); },
                       0);
        total += area.integrate(f);
    }
    for (const Atom& a : nu.atoms) total += a.mass * std::norm(k2(a.point));
    return total;
}

OperatorBerezin berezin(const TruncatedToeplitz& op, Complex z, const DiskRule& rule, double p) {
    if (!(p > 1.0))
        throw std::invalid_argument("berezin(operator): p > 1 required for the k^p/k^q pairing");
    const SpaceParams& sp = op.params;
    const double q = conjugate_exponent(p);
    KernelEval eval(sp);
    DiskFunction kz([&eval, z](Complex w) { return eval.K(w, z); }, sp.m);
    const double norm_p_val = rule.norm_p(kz, p);
    const double norm_q_val = (p == 2.0) ? norm_p_val : rule.norm_p(kz, q);

    // coefficients of K(., z) in the orthonormal basis are conj(e_k(z))
    const VectorXcd e = basis_at(sp, z, op.N);
    const VectorXcd x = e.conjugate() / norm_p_val;
    const VectorXcd y = e.conjugate() / norm_q_val;

    OperatorBerezin out;
    out.value = (y.adjoint() * (op.entries * x))(0, 0);
    const double diag = eval.K_diag(z);
    out.truncation_tail = std::max(0.0, 1.0 - e.squaredNorm() / diag);
    return out;
}

std::vector<WeakConvergenceRow> weak_convergence_probe(const SpaceParams& params, double p,
                                                       const std::function<Complex(Complex)>& h,
                                                       const std::vector<double>& radii,
                                                       const DiskRule& rule) {
    if (!(p > 1.0)) throw std::invalid_argument("weak_convergence_probe: p > 1 required");
    const double q = conjugate_exponent(p);
    const int mq = pole_order_bound(q, params.beta);
    const double bconst = std::pow(beta(params.alpha + 1.0, params.beta + 1.0), 1.0 / p);
    KernelEval eval(params);

    DiskFunction gh([&](Complex w) {
        Complex denom = 1.0;
        for (int k = 0; k < mq; ++k) denom *= w;
        return h(w) / denom;
    }, mq);

    std::vector<WeakConvergenceRow> rows;
    rows.reserve(radii.size());
    for (double r : radii) {
        const Complex z(r, 0.0);
        DiskFunction kz([&eval, z](Complex w) { return eval.K(w, z); }, params.m);
        const double norm = rule.norm_p(kz, p);
        const Complex pairing = rule.inner_product(gh, kz) / norm;
        const double t = 1.0 - r * r;
        const Complex scale = bconst * std::pow(r, params.m - mq) *
                              std::pow(t, (2.0 + params.alpha) / q) * h(z);
        rows.push_back({r, pairing, pairing / scale});
    }
    return rows;
}

ArrayXd singular_values(const MatrixXcd& m) {
    if (m.rows() > 512) throw std::invalid_argument("singular_values: dense guard exceeded");
    Eigen::JacobiSVD<MatrixXcd> svd(m);
    return svd.singularValues().array();
}

CompactnessReport compactness_diagnostic(const SymbolFunction& phi, const SpaceParams& params,
                                         const std::vector<int>& N_list, const DiskRule& rule) {
    if (!phi.continuous_to_boundary && !phi.compact_support)
        throw std::invalid_argument(
            "compactness_diagnostic: symbol must be flagged continuous up to the boundary "
            "or compactly supported");
    CompactnessReport rep;

    const int angles = phi.radial ? 2 : 8;
    for (int j = 0; j < angles; ++j) {
        const double th = 2.0 * M_PI * j / angles + 0.1;
        const Complex z = 0.99 * Complex(std::cos(th), std::sin(th));
        rep.berezin_boundary_max =
            std::max(rep.berezin_boundary_max, std::abs(berezin(phi, params, z, rule)));
    }

    for (int N : N_list) {
        if (N > 128) throw std::invalid_argument("compactness_diagnostic: N > 128 dense guard");
        const TruncatedToeplitz op = toeplitz_matrix(phi, params, N, rule);
        const ArrayXd sv = singular_values(op.entries);
        double tail = 0.0;
        for (int k = N / 2; k < N; ++k) tail = std::max(tail, sv[k]);
        rep.tail_sv.emplace_back(N, tail);
    }

    rep.compact_consistent = rep.berezin_boundary_max < rep.berezin_threshold &&
                             !rep.tail_sv.empty() &&
                             rep.tail_sv.back().second < rep.tail_threshold;
    return rep;
}

AlgebraResiduals toeplitz_algebra_checks(const VectorXcd& phi1, const VectorXcd& phi2,
                                         const SpaceParams& params, int N, const DiskRule& rule) {
    const int d1 = static_cast<int>(phi1.size()) - 1;
    const int d2 = static_cast<int>(phi2.size()) - 1;
    if (d1 < 0 || d2 < 0) throw std::invalid_argument("toeplitz_algebra_checks: empty symbol");
    if (d1 + d2 > N / 2)
        throw std::invalid_argument("toeplitz_algebra_checks: deg phi1 + deg phi2 > N/2");

    auto poly = [](const VectorXcd& c) {
        return [c](Complex z) {
            Complex acc(0.0, 0.0);
            for (Eigen::Index k = c.size() - 1; k >= 0; --k) acc = acc * z + c[k];
            return acc;
        };
    };
    auto sym = [&](std::function<Complex(Complex)> f) {
        SymbolFunction s;
        s.eval = std::move(f);
        return s;
    };

    const auto f1 = poly(phi1), f2 = poly(phi2);
    const MatrixXcd t1 = toeplitz_matrix(sym(f1), params, N, rule).entries;
    const MatrixXcd t2 = toeplitz_matrix(sym(f2), params, N, rule).entries;
    const MatrixXcd tsum =
        toeplitz_matrix(sym([&](Complex z) { return f1(z) + f2(z); }), params, N, rule).entries;
    const MatrixXcd t1c =
        toeplitz_matrix(sym([&](Complex z) { return std::conj(f1(z)); }), params, N, rule).entries;
    const MatrixXcd tprod =
        toeplitz_matrix(sym([&](Complex z) { return std::conj(f1(z)) * f2(z); }), params, N, rule)
            .entries;

    AlgebraResiduals res;
    res.additivity = (tsum - t1 - t2).norm();
    res.adjoint = (t1c - t1.adjoint()).norm();
    res.block = N - d1 - d2;
    res.multiplicativity =
        (t1c * t2 - tprod).topLeftCorner(res.block, res.block).norm();
    return res;
}

} // namespace bergman
