#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bergman/quadrature.hpp"
#include "oracles.hpp"

#include <cmath>
#include <vector>

using bergman::Complex;
using bergman::DiskFunction;
using bergman::make_space;

namespace {

DiskFunction monomial_abs2n(double n) {
    return DiskFunction([n](Complex z) { return Complex(std::pow(std::norm(z), n), 0.0); },
                        n < 0 ? static_cast<int>(std::ceil(-2.0 * n)) : 0);
}

} // namespace

TEST_CASE("gauss_jacobi: reproduces Beta moments on [0,1]") {
    // integral_0^1 u^k (1-u)^a u^b du = B(a+1, b+k+1)
    for (double a : {0.0, 0.5, 2.0}) {
        for (double b : {-0.5, 0.0, 1.5}) {
            bergman::Rule1D r = bergman::gauss_jacobi01(40, a, b);
            for (int k = 0; k <= 12; ++k) {
                const double got = (r.w * r.x.pow(double(k))).sum();
                const double want =
                    static_cast<double>(oracle::beta_series(a + 1.0L, b + k + 1.0L));
                CHECK(got == doctest::Approx(want).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("build_rule: normalization integrates 1 to 1e-14") {
    for (auto [a, b] : std::vector<std::pair<double, double>>{
             {0.0, 0.0}, {2.0, 1.5}, {0.5, 0.5}, {-0.5, -0.75}}) {
        auto rule = bergman::build_rule(make_space(a, b), 64, 128);
        const Complex one = rule.integrate(DiskFunction([](Complex) { return Complex(1.0, 0.0); }));
        CHECK(std::abs(one - Complex(1.0, 0.0)) <= 1e-14);
    }
}

TEST_CASE("integrate: pinned values") {
    auto rule = bergman::build_rule(make_space(0.0, 0.0), 64, 128);
    CHECK(std::abs(rule.integrate(DiskFunction([](Complex z) { return z; }))) <= 1e-15);
    const Complex m = rule.integrate(monomial_abs2n(1.0));
    CHECK(m.real() == doctest::Approx(0.5).epsilon(1e-14));  // B(1,2)/B(1,1)
}

TEST_CASE("integrate: monomial moments match the Beta-ratio oracle") {
    for (auto [a, b] : std::vector<std::pair<double, double>>{
             {0.0, 0.0}, {0.5, 0.5}, {2.0, 1.5}, {0.5, -0.5}}) {
        auto sp = make_space(a, b);
        auto rule = bergman::build_rule(sp, 200, 256);
        // includes the negative powers |z|^{2(k-m)} down to k = 0
        for (int k = 0; k <= 10; ++k) {
            const double t = static_cast<double>(k - sp.m);
            const double want = static_cast<double>(
                oracle::moment_ratio(a, b, static_cast<long double>(t)));
            const Complex got = rule.integrate(monomial_abs2n(t));
            CHECK(got.real() == doctest::Approx(want).epsilon(1e-12));
            CHECK(std::abs(got.imag()) <= 1e-14 * want);
        }
    }
}

TEST_CASE("inner_product: angular orthogonality and <z,z>") {
    auto rule = bergman::build_rule(make_space(0.0, 0.0), 64, 128);
    DiskFunction z1([](Complex z) { return z; });
    DiskFunction z2([](Complex z) { return z * z; });
    DiskFunction one([](Complex) { return Complex(1.0, 0.0); });
    CHECK(std::abs(rule.inner_product(one, one) - Complex(1.0, 0.0)) <= 1e-14);
    CHECK(std::abs(rule.inner_product(z1, z2)) <= 1e-14);
    CHECK(std::abs(rule.inner_product(z1, one)) <= 1e-14);
    CHECK(rule.inner_product(z1, z1).real() == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("norm_p: pinned values including a pole basis function") {
    auto sp00 = make_space(0.0, 0.0, 2.0);
    auto rule00 = bergman::build_rule(sp00, 64, 128);
    DiskFunction one([](Complex) { return Complex(1.0, 0.0); });
    CHECK(rule00.norm_p(one, 3.0) == doctest::Approx(1.0).epsilon(1e-14));
    DiskFunction idf([](Complex z) { return z; });
    CHECK(rule00.norm_p(idf, 2.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));

    // f(z) = 1/z in the (alpha=0, beta=1) space: ||f||_2 = sqrt(B(1,1)/B(1,2)) = sqrt(2)
    auto sp01 = make_space(0.0, 1.0, 2.0);
    auto rule01 = bergman::build_rule(sp01, 64, 128);
    DiskFunction inv([](Complex z) { return 1.0 / z; }, 1);
    CHECK(rule01.norm_p(inv, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("integrate: error contracts") {
    auto sp = make_space(0.0, 0.0);
    auto rule = bergman::build_rule(sp, 16, 16);
    // declared pole order 2 with beta = 0 is non-integrable
    DiskFunction bad([](Complex z) { return 1.0 / (z * z); }, 2);
    CHECK_THROWS_AS(rule.integrate(bad), std::domain_error);
    // non-finite node value reported with the node
    DiskFunction nan_fn([](Complex) { return Complex(std::nan(""), 0.0); });
    CHECK_THROWS_WITH_AS(rule.integrate(nan_fn),
                         doctest::Contains("non-finite value at node"),
                         bergman::accuracy_error);
    CHECK_THROWS_AS(bergman::build_rule(sp, 2, 128), std::invalid_argument);
}

TEST_CASE("mc_integrate: pinned behaviour") {
    auto sp = make_space(0.0, 0.0);
    DiskFunction one([](Complex) { return Complex(1.0, 0.0); });
    auto est = bergman::mc_integrate(one, sp, 20000, 99);
    CHECK(est.value.real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(est.std_error <= 1e-12);

    auto est2 = bergman::mc_integrate(monomial_abs2n(1.0), sp, 40000, 1234);
    CHECK(std::abs(est2.value.real() - 0.5) <= 3.0 * est2.std_error);

    DiskFunction rez([](Complex z) { return Complex(z.real(), 0.0); });
    auto est3 = bergman::mc_integrate(rez, sp, 40000, 777);
    CHECK(std::abs(est3.value.real()) <= 3.0 * est3.std_error);

    CHECK_THROWS_AS(bergman::mc_integrate(one, sp, 100, 1), std::invalid_argument);
}

TEST_CASE("mc_integrate agrees with the deterministic rule on a 10-function corpus") {
    auto sp = make_space(0.7, 0.9);
    auto rule = bergman::build_rule(sp, 128, 192);
    std::vector<DiskFunction> corpus = {
        DiskFunction([](Complex) { return Complex(1.0, 0.0); }),
        DiskFunction([](Complex z) { return z; }),
        DiskFunction([](Complex z) { return std::conj(z); }),
        monomial_abs2n(1.0),
        monomial_abs2n(2.5),
        DiskFunction([](Complex z) { return z * z + std::conj(z); }),
        DiskFunction([](Complex z) { return std::exp(z) * 0.5; }),
        DiskFunction([](Complex z) { return 1.0 / (2.0 - z); }),
        DiskFunction([](Complex z) { return Complex(std::pow(1.0 - std::norm(z), 1.5), 0.0); }),
        DiskFunction([](Complex z) { return Complex(z.real() * std::norm(z), z.imag()); }),
    };
    std::uint64_t seed = 2024;
    for (const auto& f : corpus) {
        const Complex det = rule.integrate(f);
        const auto mc = bergman::mc_integrate(f, sp, 60000, seed++);
        CHECK(std::abs(mc.value - det) <= 4.0 * std::max(mc.std_error, 1e-12));
    }
}

TEST_CASE("doubling the rule changes smooth integrals by < 1e-10") {
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0.0, 0.0}, {0.5, 1.5}}) {
        auto sp = make_space(a, b);
        auto coarse = bergman::build_rule(sp, 200, 256);
        auto fine = bergman::build_rule(sp, 400, 512);
        std::vector<DiskFunction> corpus = {
            DiskFunction([](Complex z) { return std::exp(z); }),
            DiskFunction([](Complex z) { return 1.0 / (2.0 - z); }),
            DiskFunction([](Complex z) { return std::cos(z); }),
            DiskFunction([](Complex z) { return Complex(std::exp(-std::norm(z)), 0.0); }),
            DiskFunction([](Complex z) { return Complex(std::pow(1.0 - std::norm(z), 2.5), 0.0); }),
        };
        for (const auto& f : corpus) {
            const Complex c = coarse.integrate(f);
            const Complex g = fine.integrate(f);
            CHECK(std::abs(c - g) <= 1e-10);
        }
    }
}
