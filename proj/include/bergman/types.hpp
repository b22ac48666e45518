#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace bergman {

using Complex = std::complex<double>;

using Eigen::ArrayXd;
using Eigen::ArrayXcd;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

/// Raised when a requested accuracy cannot be met (series cap, quadrature
/// refusal near the boundary, non-convergent contour refinement).
class accuracy_error : public std::runtime_error {
public:
    explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a rule or grid cannot be constructed.
class construction_error : public std::runtime_error {
public:
    explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

/// Parameters of the weighted space: weight |z|^(2 beta) (1-|z|^2)^alpha
/// against normalized area, with the unique splitting beta = beta0 + m,
/// beta0 in (-1, 0], m a nonnegative integer.
struct SpaceParams {
    double alpha = 0.0;
    double beta = 0.0;
    double beta0 = 0.0;
    int m = 0;
    double p = 2.0;
    double q = 2.0;  // conjugate exponent; +inf when p == 1
};

inline double conjugate_exponent(double p) {
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    return p / (p - 1.0);
}

inline SpaceParams make_space(double alpha, double beta, double p = 2.0) {
    if (!(alpha > -1.0)) throw std::domain_error("alpha out of range: require alpha > -1");
    if (!(beta > -1.0)) throw std::domain_error("beta out of range: require beta > -1");
    if (!(p >= 1.0)) throw std::domain_error("p out of range: require p >= 1");
    SpaceParams sp;
    sp.alpha = alpha;
    sp.beta = beta;
    sp.m = static_cast<int>(std::ceil(beta));
    if (sp.m < 0) sp.m = 0;  // ceil(beta) = -0.0 for beta in (-1, 0]
    sp.beta0 = beta - sp.m;
    sp.p = p;
    sp.q = conjugate_exponent(p);
    return sp;
}

inline double sqr(double x) { return x * x; }

} // namespace bergman
