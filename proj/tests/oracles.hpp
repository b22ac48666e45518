// Test-side oracles, independent of the library implementation paths they
// check. Everything here is long-double series/quadrature arithmetic with
// no dependency on src/.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

// zeta(k) for integer k >= 2 by direct summation plus Euler-Maclaurin tail
// (B2, B4, B6 corrections). Good to ~1e-19 with M = 240.
inline long double zeta_int(int k) {
    const int M = 240;
    long double s = 0.0L;
    for (int j = M; j >= 1; --j) s += powl((long double)j, (long double)-k);
    const long double m = (long double)M;
    long double tail = powl(m, 1.0L - k) / (k - 1.0L) - 0.5L * powl(m, (long double)-k);
    long double kk = k;
    tail += kk / 12.0L * powl(m, -kk - 1.0L);
    tail -= kk * (kk + 1.0L) * (kk + 2.0L) / 720.0L * powl(m, -kk - 3.0L);
    tail += kk * (kk + 1.0L) * (kk + 2.0L) * (kk + 3.0L) * (kk + 4.0L) / 30240.0L * powl(m, -kk - 5.0L);
    return s + tail;
}

// ln Gamma(1+y) = -gamma_E*y + sum_{k>=2} (-1)^k zeta(k) y^k / k, |y| <= 0.5.
// 50+ terms; at |y| <= 0.5 the truncation error is far below 1e-18 relative.
inline long double lgamma1p_series(long double y) {
    const long double euler_gamma = 0.5772156649015328606065120900824024L;
    long double s = -euler_gamma * y;
    long double yk = y;
    for (int k = 2; k <= 60; ++k) {
        yk *= y;
        long double term = zeta_int(k) * yk / k;
        s += (k % 2 == 0) ? term : -term;
    }
    return s;
}

// ln Gamma(x) for x > 0: shift into [0.5, 1.5] with the recursion
// Gamma(x+1) = x Gamma(x), then use the series around 1 (|y| <= 0.5).
inline long double lgamma_series(long double x) {
    if (!(x > 0.0L)) throw std::domain_error("lgamma_series: x <= 0");
    long double shift = 0.0L;
    while (x < 0.5L) {
        shift -= logl(x);
        x += 1.0L;
    }
    while (x > 1.5L) {
        x -= 1.0L;
        shift += logl(x);
    }
    return shift + lgamma1p_series(x - 1.0L);
}

inline long double beta_series(long double a, long double b) {
    return expl(lgamma_series(a) + lgamma_series(b) - lgamma_series(a + b));
}

// Monomial moment of the weighted disk measure:
//   integral |z|^(2t) dmu_{alpha,beta} = B(alpha+1, t+beta+1) / B(alpha+1, beta+1),
// valid for t + beta > -1. This is the closed polar-coordinates form used
// as the quadrature oracle throughout.
inline long double moment_ratio(long double alpha, long double beta, long double t) {
    if (!(t + beta > -1.0L)) throw std::domain_error("moment_ratio: divergent moment");
    return beta_series(alpha + 1.0L, t + beta + 1.0L) / beta_series(alpha + 1.0L, beta + 1.0L);
}

// Pochhammer (a)_n = Gamma(a+n)/Gamma(a) through the series lgamma (a>0, a+n>0).
inline long double pochhammer_series(long double a, long double n) {
    return expl(lgamma_series(a + n) - lgamma_series(a));
}

} // namespace oracle
