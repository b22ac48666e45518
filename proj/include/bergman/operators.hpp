#pragma once

#include "bergman/kernel.hpp"
#include "bergman/projection.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/types.hpp"

#include <functional>
#include <vector>

namespace bergman {

/// Bounded measurable symbol on the disk with structural flags used by the
/// diagnostics (radial, compactly supported, boundary behaviour).
struct SymbolFunction {
    std::function<Complex(Complex)> eval;
    bool radial = false;
    bool compact_support = false;
    double support_radius = 1.0;
    bool continuous_to_boundary = false;
    std::function<Complex(Complex)> boundary_trace;  // optional, on |z| = 1

    Complex operator()(Complex z) const { return eval(z); }
};

struct Atom {
    Complex point;
    double mass = 0.0;
};

/// Finite positive Borel measure: a density against normalized area, a
/// finite atomic part, or both.
struct BorelMeasure {
    std::function<double(Complex)> density;
    std::vector<Atom> atoms;

    bool has_density() const { return static_cast<bool>(density); }
};

struct TruncatedToeplitz {
    SpaceParams params;
    int N = 0;
    MatrixXcd entries;  // M(j, k) = <phi e_k, e_j>
};

/// Basis values at the rule nodes: E(node, k) = e_k(z_node), with
/// e_k(z) = z^(k-m) / ||z^(k-m)||. Node index is i * n_angular + j.
MatrixXcd basis_matrix(const SpaceParams& params, const DiskRule& rule, int N);

/// Orthonormal basis vector evaluated at one point.
VectorXcd basis_at(const SpaceParams& params, Complex z, int N);

TruncatedToeplitz toeplitz_matrix(const SymbolFunction& phi, const SpaceParams& params, int N,
                                  const DiskRule& rule);

/// Measure Toeplitz matrix: M(j,k) = integral e_k conj(e_j) dnu. The density
/// part integrates against normalized area with a Legendre-in-u disk rule of
/// the same resolution as `rule`; atoms contribute rank-one terms.
TruncatedToeplitz toeplitz_from_measure(const BorelMeasure& nu, const SpaceParams& params, int N,
                                        const DiskRule& rule);

/// k^z_{alpha,beta,p} = K(., z) / ||K(., z)||_p with the norm from quadrature.
class NormalizedKernel {
public:
    NormalizedKernel(const SpaceParams& params, double p, Complex z, double norm)
        : params_(params), eval_(params), p_(p), z_(z), norm_(norm) {}

    Complex operator()(Complex w) const { return eval_.K(w, z_) / norm_; }
    const SpaceParams& params() const { return params_; }
    double p() const { return p_; }
    Complex center() const { return z_; }
    double kernel_norm() const { return norm_; }

private:
    SpaceParams params_;
    KernelEval eval_;
    double p_;
    Complex z_;
    double norm_;
};

NormalizedKernel normalized_kernel(const SpaceParams& params, double p, Complex z,
                                   const DiskRule& rule);

/// Berezin transform of a symbol / measure at z (pairing against |k^z_2|^2),
/// and of a truncated operator (pairing k^z_p against k^z_q in the basis).
Complex berezin(const SymbolFunction& phi, const SpaceParams& params, Complex z,
                const DiskRule& rule);
Complex berezin(const BorelMeasure& nu, const SpaceParams& params, Complex z,
                const DiskRule& rule);

struct OperatorBerezin {
    Complex value;
    double truncation_tail = 0.0;  // share of the kernel's 2-norm mass beyond N
};
OperatorBerezin berezin(const TruncatedToeplitz& op, Complex z, const DiskRule& rule,
                        double p = 2.0);

struct WeakConvergenceRow {
    double r = 0.0;
    Complex pairing;
    Complex compensated;  // pairing / (B^(1/p) |z|^(m - m_q) (1-|z|^2)^((2+alpha)/q) h(z))
};

/// Pairings <g_h, k^z_p> along a radial path, g_h(z) = h(z)/z^(m_{q,beta}).
std::vector<WeakConvergenceRow> weak_convergence_probe(const SpaceParams& params, double p,
                                                       const std::function<Complex(Complex)>& h,
                                                       const std::vector<double>& radii,
                                                       const DiskRule& rule);

ArrayXd singular_values(const MatrixXcd& m);

struct CompactnessReport {
    double berezin_boundary_max = 0.0;               // max |berezin| at |z| = 0.99
    std::vector<std::pair<int, double>> tail_sv;     // (N, max of sigma_{N/2..N-1})
    bool compact_consistent = false;
    double berezin_threshold = 0.05;
    double tail_threshold = 1e-2;
};

CompactnessReport compactness_diagnostic(const SymbolFunction& phi, const SpaceParams& params,
                                         const std::vector<int>& N_list, const DiskRule& rule);

struct AlgebraResiduals {
    double additivity = 0.0;
    double adjoint = 0.0;
    double multiplicativity = 0.0;  // on the leading block
    int block = 0;
};

/// Residuals of T_{phi1+phi2} - T_{phi1} - T_{phi2}, the adjoint law, and
/// T_{conj(phi1)} T_{phi2} - T_{conj(phi1) phi2} on the leading block.
/// phi1, phi2 are analytic polynomials given by coefficient vectors.
AlgebraResiduals toeplitz_algebra_checks(const VectorXcd& phi1, const VectorXcd& phi2,
                                         const SpaceParams& params, int N, const DiskRule& rule);

} // namespace bergman
