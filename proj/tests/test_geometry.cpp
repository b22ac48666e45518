#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bergman/geometry.hpp"

#include <cmath>
#include <random>
#include <vector>

using bergman::Complex;
using bergman::make_space;

namespace {

// test-side Poincare polyline length (density 1/(1-|z|^2), dense midpoint)
double poincare_polyline_length(const std::vector<Complex>& pts) {
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        const Complex a = pts[k], b = pts[k + 1];
        const int n = 4000;
        const Complex step = (b - a) / static_cast<double>(n);
        for (int i = 0; i < n; ++i) {
            const Complex m = a + (i + 0.5) * step;
            total += std::abs(step) / (1.0 - std::norm(m));
        }
    }
    return total;
}

bergman::GridConfig test_grid() {
    bergman::GridConfig g;
    g.n_radial = 200;
    g.n_angular = 256;
    g.r_max = 0.99;
    return g;
}

} // namespace

TEST_CASE("metric_density: pinned values") {
    // rho(0) = sqrt((alpha+2+beta)/(1+beta))
    for (double a : {0.0, 0.5, 2.0})
        for (double b : {-0.75, -0.5, -0.25, 0.0})
            CHECK(bergman::metric_density(make_space(a, b), Complex(0, 0)) ==
                  doctest::Approx(std::sqrt((a + 2.0 + b) / (1.0 + b))).epsilon(1e-12));

    // beta = 0: exactly sqrt(alpha+2)/(1-|z|^2)
    for (double a : {0.0, 1.5})
        for (double r : {0.0, 0.3, 0.9})
            CHECK(bergman::metric_density(make_space(a, 0.0), Complex(r, 0)) ==
                  doctest::Approx(std::sqrt(a + 2.0) / (1.0 - r * r)).epsilon(1e-14));

    CHECK(bergman::metric_density(make_space(0.0, 0.0), Complex(0.5, 0)) ==
          doctest::Approx(std::sqrt(2.0) / 0.75).epsilon(1e-14));

    CHECK_THROWS_AS(bergman::metric_density(make_space(0.0, 0.5), Complex(0, 0)),
                    std::domain_error);
}

TEST_CASE("metric_density: (Pe) sandwich and nonnegativity") {
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> rad(0.0, 0.97);
    std::uniform_real_distribution<double> ang(0.0, 6.28318);
    for (double a : {0.0, 0.5, 2.0}) {
        for (double b : {-0.75, -0.5, 0.0}) {
            const auto sp = make_space(a, b);
            const double lo = std::sqrt(a + 2.0);
            const double hi = std::sqrt((a + 2.0 + b) / (1.0 + b));
            for (int i = 0; i < 300; ++i) {
                const Complex z = std::polar(rad(gen), ang(gen));
                const double rho = bergman::metric_density(sp, z);
                const double pc = 1.0 / (1.0 - std::norm(z));
                CHECK(rho >= lo * pc * (1.0 - 1e-12));
                CHECK(rho <= hi * pc * (1.0 + 1e-12));
            }
        }
    }
}

TEST_CASE("density_vs_log_kernel_check: finite-difference oracle") {
    const auto sp00 = make_space(0.0, 0.0);
    const double rho2_03 = bergman::metric_density_sq_t(sp00, 0.09);
    CHECK(bergman::density_vs_log_kernel_check(sp00, Complex(0.3, 0.0), 1e-3) <=
          1e-4 * rho2_03);

    const auto sp = make_space(2.0, -0.5);
    const double rho2_05 = bergman::metric_density_sq_t(sp, 0.25);
    CHECK(bergman::density_vs_log_kernel_check(sp, Complex(0.5, 0.0), 1e-3) <= 1e-3 * rho2_05);

    // symmetric stencil at the origin
    const double rho2_0 = bergman::metric_density_sq_t(sp, 0.0);
    CHECK(bergman::density_vs_log_kernel_check(sp, Complex(0.0, 0.0), 1e-3) <= 1e-4 * rho2_0);

    CHECK_THROWS_AS(bergman::density_vs_log_kernel_check(sp00, Complex(0.999, 0.0), 1e-2),
                    std::domain_error);
}

TEST_CASE("mobius: involution and the 1-|psi|^2 identity") {
    std::mt19937 gen(17);
    std::uniform_real_distribution<double> rad(0.0, 0.95);
    std::uniform_real_distribution<double> ang(0.0, 6.28318);
    for (int i = 0; i < 200; ++i) {
        const Complex z = std::polar(rad(gen), ang(gen));
        const Complex w = std::polar(rad(gen), ang(gen));
        CHECK(std::abs(bergman::mobius(z, Complex(0, 0)) - z) == 0.0);
        CHECK(std::abs(bergman::mobius(z, bergman::mobius(z, w)) - w) <= 1e-13);
        const double lhs = 1.0 - std::norm(bergman::mobius(z, w));
        const double rhs = (1.0 - std::norm(z)) * (1.0 - std::norm(w)) /
                           std::norm(1.0 - std::conj(z) * w);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
    CHECK_THROWS_AS(bergman::mobius(Complex(0.99999999999999994, 0.0), Complex(1.0, 0.0)),
                    std::domain_error);
}

TEST_CASE("curve_length: pinned values and the (Pe) sandwich") {
    const auto sp00 = make_space(0.0, 0.0);
    CHECK(bergman::curve_length({Complex(0.3, 0.2), Complex(0.3, 0.2)}, sp00) == 0.0);

    // radial segment 0 -> 0.5 in the classical case: sqrt(2) atanh(1/2)
    const double want = std::sqrt(2.0) * std::atanh(0.5);
    CHECK(bergman::curve_length({Complex(0, 0), Complex(0.5, 0)}, sp00) ==
          doctest::Approx(want).epsilon(1e-8));

    std::mt19937 gen(23);
    std::uniform_real_distribution<double> rad(0.0, 0.9);
    std::uniform_real_distribution<double> ang(0.0, 6.28318);
    for (double b : {-0.5, -0.25}) {
        const auto sp = make_space(1.0, b);
        const double lo = std::sqrt(3.0), hi = std::sqrt((3.0 + b) / (1.0 + b));
        for (int i = 0; i < 5; ++i) {
            std::vector<Complex> poly;
            for (int k = 0; k < 4; ++k) poly.push_back(std::polar(rad(gen), ang(gen)));
            const double len = bergman::curve_length(poly, sp);
            const double plen = poincare_polyline_length(poly);
            CHECK(len >= lo * plen * (1.0 - 1e-6));
            CHECK(len <= hi * plen * (1.0 + 1e-6));
        }
    }
}

TEST_CASE("distance: radial closed form and basic structure") {
    const auto sp = make_space(0.0, 0.0);
    const auto cfg = test_grid();

    const auto same = bergman::distance(Complex(0.2, 0.1), Complex(0.2, 0.1), sp, cfg);
    CHECK(same.value == 0.0);

    const auto res = bergman::distance(Complex(0, 0), Complex(0.5, 0), sp, cfg);
    const double want = std::sqrt(2.0) * std::atanh(0.5);
    CHECK(std::abs(res.value - want) <= 1e-3);
    CHECK(res.bracket_lo == doctest::Approx(want).epsilon(1e-13));
    CHECK(res.bracket_hi == doctest::Approx(want).epsilon(1e-13));

    // graph symmetry
    const auto ab = bergman::distance(Complex(0.3, 0.4), Complex(-0.2, 0.5), sp, cfg);
    const auto ba = bergman::distance(Complex(-0.2, 0.5), Complex(0.3, 0.4), sp, cfg);
    CHECK(std::abs(ab.graph_fine - ba.graph_fine) <= 1e-9 * ab.graph_fine);
}

TEST_CASE("distance: bracket containment and triangle inequality") {
    std::mt19937 gen(31);
    std::uniform_real_distribution<double> rad(0.05, 0.85);
    std::uniform_real_distribution<double> ang(0.0, 6.28318);
    const auto cfg = test_grid();
    for (double b : {0.0, -0.5}) {
        const auto sp = make_space(0.5, b);
        for (int i = 0; i < 6; ++i) {
            const Complex p = std::polar(rad(gen), ang(gen));
            const Complex q = std::polar(rad(gen), ang(gen));
            const auto res = bergman::distance(p, q, sp, cfg);
            CHECK(res.value + res.error >= res.bracket_lo * (1.0 - 1e-9));
            CHECK(res.value - res.error <= res.bracket_hi * (1.0 + 1e-9));
        }
        // triangle inequality with grid tolerance
        const Complex a(0.4, 0.1), m(0.1, -0.3), c(-0.5, 0.2);
        const auto ac = bergman::distance(a, c, sp, cfg);
        const auto am = bergman::distance(a, m, sp, cfg);
        const auto mc = bergman::distance(m, c, sp, cfg);
        CHECK(ac.value <= am.value + mc.value + 2.0 * (am.error + mc.error + ac.error));
    }
}

TEST_CASE("BergmanDisc: classical area closed form") {
    const auto sp = make_space(0.0, 0.0);
    for (double r : {0.5, 1.0, 2.0}) {
        for (double zr : {0.0, 0.3, 0.6}) {
            bergman::BergmanDisc disc(sp, Complex(zr, 0.0), r);
            const double tau = std::tanh(r / std::sqrt(2.0));
            const double t = zr * zr;
            const double want = bergman::sqr((1.0 - t) * tau / (1.0 - t * tau * tau));
            CHECK(disc.measure() == doctest::Approx(want).epsilon(1e-6));
            CHECK(disc.bounds().area_lower == doctest::Approx(want).epsilon(1e-13));
            CHECK(disc.bounds().area_upper == doctest::Approx(want).epsilon(1e-13));
        }
    }
}

TEST_CASE("BergmanDisc: membership, monotonicity, measure lower-bound trend") {
    const auto sp = make_space(0.5, -0.5);
    const Complex z(0.45, 0.2);
    bergman::BergmanDisc disc(sp, z, 0.8);
    CHECK(disc.contains(z));
    CHECK_FALSE(disc.contains(Complex(-0.9, 0.0)));
    CHECK(disc.measure() > 0.0);

    // monotone in r
    double prev = 0.0;
    for (double r : {0.25, 0.5, 1.0, 1.5}) {
        const double m = bergman::disc_measure(sp, z, r);
        CHECK(m >= prev);
        prev = m;
    }

    // mu(D) versus the (1-|z|^2)^(alpha+2) tau2^(alpha+2) / (1-|z|^2 tau2^2)^(alpha+2)
    // display: the ratio stays positive and within a stable band along a scan
    const double c_hi = std::sqrt((sp.alpha + 2.0 + sp.beta) / (1.0 + sp.beta));
    const double tau2 = std::tanh(0.8 / c_hi);
    std::vector<double> ratios;
    for (double zr : {0.1, 0.3, 0.5, 0.7, 0.85}) {
        const double t = zr * zr;
        const double bound = std::pow((1.0 - t) * tau2 * tau2 / (1.0 - t * tau2 * tau2),
                                      sp.alpha + 2.0) /
                             std::pow(tau2, sp.alpha + 2.0);
        const double m = bergman::disc_measure(sp, Complex(zr, 0.0), 0.8);
        ratios.push_back(m / bound);
        CHECK(m / bound > 0.0);
    }
    const auto [mn, mx] = std::minmax_element(ratios.begin(), ratios.end());
    CHECK(*mx / *mn <= 10.0);
}

TEST_CASE("BergmanDisc: z = 0 gives a round disc") {
    const auto sp = make_space(1.0, -0.5);
    bergman::BergmanDisc disc(sp, Complex(0, 0), 0.7);
    // membership depends only on |w|
    for (double r : {0.1, 0.25, 0.4}) {
        const bool m0 = disc.contains(Complex(r, 0.0));
        for (double th : {0.7, 2.1, 4.4})
            CHECK(disc.contains(r * Complex(std::cos(th), std::sin(th))) == m0);
    }
}

TEST_CASE("kernel_infimum_check: positivity and stability") {
    const auto sp = make_space(0.0, 0.0);
    auto rule = bergman::build_rule(sp, 128, 256);
    const auto res = bergman::kernel_infimum_check(Complex(0.5, 0.0), 1.0, sp, rule);
    CHECK(res.product >= 0.1);
    CHECK(res.product <= 10.0);

    std::vector<double> products;
    for (double zr : {0.5, 0.7, 0.9}) {
        const auto r = bergman::kernel_infimum_check(Complex(zr, 0.0), 1.0, sp, rule);
        CHECK(r.product > 0.0);
        products.push_back(r.product);
    }
    const auto [mn, mx] = std::minmax_element(products.begin(), products.end());
    CHECK(*mx / *mn <= 3.0);

    // z -> 0 limit well-defined at m = 0
    CHECK(bergman::kernel_infimum_check(Complex(0, 0), 1.0, sp, rule).product > 0.0);

    // refuses parameter sets with kernel zeros
    auto rule2 = bergman::build_rule(make_space(2.0, -0.5), 64, 64);
    CHECK_THROWS_AS(bergman::kernel_infimum_check(Complex(0.5, 0), 1.0, make_space(2.0, -0.5),
                                                  rule2),
                    std::domain_error);
}

TEST_CASE("cauchy_schwarz_check: actual arithmetic of the three sums") {
    // x = 0: equality 0 <= 0
    CHECK(bergman::cauchy_schwarz_check(1, -0.5, 0.0));
    CHECK(bergman::cauchy_schwarz_check(3, -0.25, 0.0));
    // the 0 < x < 1 regime backed by subharmonicity
    CHECK(bergman::cauchy_schwarz_check(1, -0.5, 0.5));
    CHECK(bergman::cauchy_schwarz_check(2, -0.75, 0.3));
    CHECK(bergman::cauchy_schwarz_check(4, -0.1, 0.9));
    // beta = 0: only the j = 0 term survives, trivially true for any x
    CHECK(bergman::cauchy_schwarz_check(2, 0.0, -3.0));
    CHECK(bergman::cauchy_schwarz_check(2, 0.0, 0.5));
    // for beta < 0 the j = 0 weight 1/beta is negative and the claimed
    // x <= 0 case genuinely fails: alpha=1, beta=-1/2, x=-1 gives
    // (16/3)^2 = 256/9 on the left against (20/3)(8/3) = 160/9
    CHECK_FALSE(bergman::cauchy_schwarz_check(1, -0.5, -1.0));

    CHECK_THROWS_AS(bergman::cauchy_schwarz_check(-1, -0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(bergman::cauchy_schwarz_check(1, 0.5, 0.0), std::domain_error);
}
