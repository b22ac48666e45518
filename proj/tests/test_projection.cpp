#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bergman/projection.hpp"
#include "bergman/specfun.hpp"
#include "oracles.hpp"

#include <cmath>
#include <vector>

using bergman::Complex;
using bergman::DiskFunction;
using bergman::make_space;
using bergman::SpaceParams;

namespace {

DiskFunction mixed_monomial(const SpaceParams& sp, int s, int t, Complex c = {1.0, 0.0}) {
    return DiskFunction(
        [s, t, c, m = sp.m](Complex z) {
            return c * std::pow(std::conj(z), s) * std::pow(z, t - m);
        },
        std::max(0, sp.m - t));
}

} // namespace

TEST_CASE("monomial_norm_sq matches the Beta-ratio oracle and Gram structure") {
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0.0, 0.0}, {0.5, 1.5}, {2.0, 0.5}}) {
        const auto sp = make_space(a, b);
        auto rule = bergman::build_rule(sp, 96, 128);
        for (int k = 0; k <= 8; ++k) {
            const double closed = bergman::monomial_norm_sq(sp, k);
            const double want = static_cast<double>(
                oracle::beta_series(a + 1.0L, k + sp.beta0 + 1.0L) /
                oracle::beta_series(a + 1.0L, b + 1.0L));
            CHECK(closed == doctest::Approx(want).epsilon(1e-13));
            // quadrature diagonal
            DiskFunction ek = mixed_monomial(sp, 0, k);
            const Complex quad = rule.inner_product(ek, ek);
            CHECK(quad.real() == doctest::Approx(closed).epsilon(1e-12));
        }
        // off-diagonal orthogonality
        DiskFunction e2 = mixed_monomial(sp, 0, 2), e5 = mixed_monomial(sp, 0, 5);
        CHECK(std::abs(rule.inner_product(e2, e5)) <= 1e-12);
    }
}

TEST_CASE("project_monomial: pinned cases") {
    const auto sp = make_space(0.0, 0.0);
    // s = 0 fixes holomorphic monomials
    for (int t : {0, 1, 5}) {
        const auto pr = bergman::project_monomial(sp, 0, t);
        CHECK(pr.coefficient == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(pr.exponent == t);
    }
    // t < s annihilates
    const auto z0 = bergman::project_monomial(sp, 3, 1);
    CHECK(z0.coefficient == 0.0);

    // (alpha=0, beta=0, s=1, t=2): (4)_{-1}/(3)_{-1} = 2/3 on z^1
    const auto pr = bergman::project_monomial(sp, 1, 2);
    CHECK(pr.coefficient == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(pr.exponent == 1);

    // the Gamma-pole configuration cannot occur for valid params: the
    // denominator argument beta0 + t + 1 - s stays >= beta0 + 1 > 0
    CHECK_NOTHROW(bergman::project_monomial(make_space(0.0, -0.99), 5, 5));
}

TEST_CASE("project: monomials go to unit coefficients") {
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0.0, 0.0}, {0.5, 1.5}}) {
        const auto sp = make_space(a, b);
        auto rule = bergman::build_rule(sp, 96, 128);
        for (int k : {0, 2, 7}) {
            auto coeff = bergman::project(mixed_monomial(sp, 0, k), sp, rule, 10);
            for (int j = 0; j < coeff.size(); ++j) {
                const double want = (j == k) ? 1.0 : 0.0;
                CHECK(std::abs(coeff[j] - Complex(want, 0.0)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("project: quadrature path matches the closed form") {
    // f = conj(z) z^{2-m} lands on 2/3 z^{1-m} (read at k = t-s = 1)
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0.0, 0.0}, {2.0, 1.5}}) {
        const auto sp = make_space(a, b);
        auto rule = bergman::build_rule(sp, 96, 128);
        auto coeff = bergman::project(mixed_monomial(sp, 1, 2), sp, rule, 8);
        const auto closed = bergman::project_monomial(sp, 1, 2);
        CHECK(std::abs(coeff[1] - Complex(closed.coefficient, 0.0)) <=
              1e-8 * (1.0 + std::abs(closed.coefficient)));
        for (int j = 0; j < 8; ++j)
            if (j != 1) CHECK(std::abs(coeff[j]) <= 1e-10);
    }

    // f = conj(z) with m = 0 projects to zero
    const auto sp = make_space(0.5, -0.25);
    auto rule = bergman::build_rule(sp, 96, 128);
    auto zero = bergman::project(mixed_monomial(sp, 1, 0), sp, rule, 8);
    for (int j = 0; j < 8; ++j) CHECK(std::abs(zero[j]) <= 1e-12);
}

TEST_CASE("project: closed form vs quadrature on an (s,t) block") {
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0.5, 0.5}, {2.0, 1.5}}) {
        const auto sp = make_space(a, b);
        auto rule = bergman::build_rule(sp, 128, 160);
        for (int s = 0; s <= 4; ++s) {
            for (int t = 0; t <= 4; ++t) {
                auto coeff = bergman::project(mixed_monomial(sp, s, t), sp, rule, 8);
                const auto closed = bergman::project_monomial(sp, s, t);
                if (t < s) {
                    for (int j = 0; j < 8; ++j) CHECK(std::abs(coeff[j]) <= 1e-12);
                } else {
                    const int k = t - s;
                    CHECK(std::abs(coeff[k] - Complex(closed.coefficient, 0.0)) <=
                          1e-8 * (1.0 + std::abs(closed.coefficient)));
                }
            }
        }
    }
}

TEST_CASE("project: idempotence and self-adjointness on a mixed corpus") {
    const auto sp = make_space(0.5, 1.5);
    auto rule = bergman::build_rule(sp, 128, 160);
    const int N = 10;

    std::vector<DiskFunction> corpus = {
        DiskFunction([&sp](Complex z) {
            return std::pow(std::conj(z), 2) * std::pow(z, 3 - sp.m) +
                   0.5 * std::pow(z, 1 - sp.m);
        }, sp.m),
        DiskFunction([&sp](Complex z) {
            return Complex(0.0, 1.0) * std::conj(z) * std::pow(z, 2 - sp.m) +
                   std::pow(z, 4 - sp.m);
        }, sp.m),
        DiskFunction([](Complex z) { return std::conj(z) + Complex(0.3, 0.1); }, 0),
    };

    for (const auto& f : corpus) {
        auto once = bergman::project(f, sp, rule, N);
        DiskFunction pf([&](Complex z) { return bergman::eval_series(once, sp, z); }, sp.m);
        auto twice = bergman::project(pf, sp, rule, N);
        for (int k = 0; k < N; ++k) CHECK(std::abs(once[k] - twice[k]) <= 1e-10);
    }

    // <Pf, g> == <f, Pg>
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            auto pf = bergman::project(corpus[i], sp, rule, N);
            auto pg = bergman::project(corpus[j], sp, rule, N);
            DiskFunction pfe([&](Complex z) { return bergman::eval_series(pf, sp, z); }, sp.m);
            DiskFunction pge([&](Complex z) { return bergman::eval_series(pg, sp, z); }, sp.m);
            const Complex lhs = rule.inner_product(pfe, corpus[j]);
            const Complex rhs = rule.inner_product(corpus[i], pge);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
        }
    }
}

TEST_CASE("project: factorization through the m = 0 space") {
    // projecting w^m f in (alpha, beta0) and shifting matches project in (alpha, beta)
    const auto sp = make_space(0.5, 1.5);
    const auto sp0 = make_space(sp.alpha, sp.beta0);
    auto rule = bergman::build_rule(sp, 128, 160);
    auto rule0 = bergman::build_rule(sp0, 128, 160);
    const int N = 8;

    DiskFunction f([&sp](Complex z) {
        return std::conj(z) * std::pow(z, 3 - sp.m) + 0.25 * std::pow(z, -sp.m);
    }, sp.m);
    DiskFunction wf([&sp, &f](Complex z) { return std::pow(z, sp.m) * f(z); }, 0);

    auto direct = bergman::project(f, sp, rule, N);
    auto lifted = bergman::project(wf, sp0, rule0, N);
    for (int k = 0; k < N; ++k) CHECK(std::abs(direct[k] - lifted[k]) <= 1e-9);
}

TEST_CASE("norm_of_projected_series: pinned values") {
    const auto sp = make_space(0.7, 1.5);
    // everything below s vanishes
    bergman::VectorXcd a = bergman::VectorXcd::Zero(3);
    a[0] = Complex(2.0, -1.0);
    a[1] = Complex(0.5, 0.0);
    a[2] = Complex(0.0, 1.0);
    CHECK(bergman::norm_of_projected_series(sp, 5, a) == 0.0);

    // s = 0, single a_0 = 1, m = 0: B(alpha+1, beta0+1)/B(alpha+1, beta+1)
    const auto spm0 = make_space(0.7, -0.3);
    bergman::VectorXcd one = bergman::VectorXcd::Zero(1);
    one[0] = 1.0;
    const double want0 = bergman::beta(1.7, 0.7) / bergman::beta(1.7, 0.7);
    CHECK(bergman::norm_of_projected_series(spm0, 0, one) ==
          doctest::Approx(want0).epsilon(1e-13));

    // (alpha=0, beta=0, s=1, a_2=1): (2/3)^2 * B(1,2)/B(1,1) = 4/18
    const auto sp00 = make_space(0.0, 0.0);
    bergman::VectorXcd a2 = bergman::VectorXcd::Zero(3);
    a2[2] = 1.0;
    CHECK(bergman::norm_of_projected_series(sp00, 1, a2) ==
          doctest::Approx(4.0 / 18.0).epsilon(1e-12));

    // quadrature cross-check: || P(conj z * (z^2 + 0.5 z^3)) ||^2
    auto rule = bergman::build_rule(sp00, 96, 128);
    bergman::VectorXcd mix = bergman::VectorXcd::Zero(4);
    mix[2] = 1.0;
    mix[3] = Complex(0.5, 0.5);
    DiskFunction f([&](Complex z) {
        return std::conj(z) * (mix[2] * z * z + mix[3] * z * z * z);
    });
    auto coeff = bergman::project(f, sp00, rule, 6);
    DiskFunction pf([&](Complex z) { return bergman::eval_series(coeff, sp00, z); });
    const double quad = bergman::sqr(rule.norm_p(pf, 2.0));
    CHECK(bergman::norm_of_projected_series(sp00, 1, mix) ==
          doctest::Approx(quad).epsilon(1e-9));
}

TEST_CASE("stated display prefactor coincides numerically with the proof form") {
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0.0, 0.0}, {0.5, 1.5}, {2.0, 0.5}}) {
        const auto sp = make_space(a, b);
        for (int s = 0; s <= 3; ++s)
            for (int k = s + sp.m; k <= s + sp.m + 5; ++k)
                CHECK(bergman::stated_display_prefactor(sp, s, k) ==
                      doctest::Approx(bergman::proof_form_prefactor(sp, s, k)).epsilon(1e-12));
    }
}

TEST_CASE("projection_bounded: pinned verdicts") {
    // alpha = a, beta = b, m = 0: bounded iff p > 1
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
        bergman::BoundednessQuery q{p, 0.5, -0.25, 0.5, -0.25};
        CHECK(bergman::projection_bounded(q).bounded == (p > 1.0));
    }
    // alpha = a = 0, beta = b = 1 (m = 1), p = 2
    bergman::BoundednessQuery q2{2.0, 0.0, 1.0, 0.0, 1.0};
    CHECK(bergman::projection_bounded(q2).bounded);
    // p = 1, alpha = 1, a = 0, beta = 1.5, b = 0.4: 0 < 0.8 <= 1
    bergman::BoundednessQuery q3{1.0, 1.0, 1.5, 0.0, 0.4};
    CHECK(bergman::projection_bounded(q3).bounded);
    // failed inequality is named
    bergman::BoundednessQuery q4{1.0, 0.0, 0.0, 0.5, 0.0};
    const auto v4 = bergman::projection_bounded(q4);
    CHECK_FALSE(v4.bounded);
    CHECK(v4.reason.find("p(alpha+1)") != std::string::npos);
}

TEST_CASE("pole_order_bound: pinned values") {
    CHECK(bergman::pole_order_bound(2.0, 0.0) == 0);
    CHECK(bergman::pole_order_bound(2.0, 0.5) == 1);
    CHECK(bergman::pole_order_bound(1.0, 0.0) == 1);
    CHECK(bergman::pole_order_bound(3.0, 0.5) == 0);  // 2(beta+1)/p = 1 is an integer
}
