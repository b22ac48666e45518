#pragma once

#include "bergman/geometry.hpp"
#include "bergman/operators.hpp"
#include "bergman/projection.hpp"
#include "bergman/types.hpp"

#include <vector>

namespace bergman {

/// Parameters of I_omega(z) = integral |Q(z conj w)| (1-|w|^2)^sigma |w|^(2 gamma)
///   / |1 - z conj w|^(2+sigma+omega) dA(w).
/// Build through make_iomega_query, which asserts numerically that Q is
/// zero-free on the disk for these parameters.
struct IOmegaQuery {
    double sigma = 0.0;
    double gamma = 0.0;
    double omega = 0.0;
    SpaceParams params;
};

IOmegaQuery make_iomega_query(double sigma, double gamma, double omega,
                              const SpaceParams& params);

struct IOmegaConfig {
    int n_radial = 0;   // 0: choose from the distance to the boundary
    int n_angular = 0;
};

double i_omega(const IOmegaQuery& query, Complex z, const IOmegaConfig& cfg = {});

enum class RegimeVerdict { Bounded, Logarithmic, PowerLaw, Inconsistent, Degenerate };

struct RegimeFit {
    double fitted_exponent = 0.0;      // bias-corrected slope of log I vs -log(1-|z|^2)
    double raw_slope = 0.0;            // plain least-squares slope, kept for reference
    double log_coefficient = 0.0;      // c of the affine model I = c log(1/(1-t)) + c0
    double log_intercept = 0.0;
    double log_ratio_stability = 0.0;  // tail spread of (I - c0)/log(1/(1-t)); the raw
                                       // ratio converges only like 1/log
    double bounded_ratio = 0.0;        // max/min of I over the tail half of the path
    RegimeVerdict verdict = RegimeVerdict::Degenerate;
    bool consistent = false;           // matches the regime expected for omega
};

/// path_values: (|z|, I(|z|)) along a path toward the boundary, >= 5 points.
RegimeFit regime_fit(const std::vector<std::pair<double, double>>& path_values, double omega);

/// Averaging function over the metric disc: (1/mu(D)) integral_D phi dmu
/// (real part of the symbol) and nu(D)/mu(D) for measures.
double averaging(const SymbolFunction& phi, Complex z, double r, const SpaceParams& params);
double averaging(const BorelMeasure& nu, Complex z, double r, const SpaceParams& params);

/// nu-mass of a metric disc (atoms on the boundary count as inside).
double measure_of_disc(const BorelMeasure& nu, const BergmanDisc& disc);

struct RatioRow {
    Complex center;
    double nu_disc = 0.0;
    double mu_disc = 0.0;
    double ratio = 0.0;
};

struct RatioSup {
    double sup = 0.0;
    Complex argmax;
    std::vector<RatioRow> table;
};

RatioSup carleson_ratio_sup(const BorelMeasure& nu, double r, const SpaceParams& params,
                            const std::vector<Complex>& centers);

struct VanishingRow {
    double center_radius = 0.0;
    double ratio = 0.0;
};

struct VanishingProfile {
    std::vector<VanishingRow> table;
    bool vanishing_consistent = false;  // decreasing and last < 0.1 * first
};

VanishingProfile vanishing_profile(const BorelMeasure& nu, double r, const SpaceParams& params,
                                   const std::vector<double>& radii);

struct FnProbeRow {
    double inner_cut = 0.0;
    double outer_radius = 0.0;
    double value = 0.0;  // two-sided truncation of ||B f_N||_p^p
};

struct FnProbeReport {
    std::vector<FnProbeRow> ladder;
    double growth_exponent = 0.0;  // fitted log2 of the tail growth per step
    bool bounded = false;
    BoundednessVerdict predicate;
    int probe_exponent = 0;
};

/// Evaluates the ||B f_N||_p^p nested integral over annuli eps_k < |z| < R_k
/// with both endpoints refining geometrically, and reports growth against
/// the boundedness predicate.
FnProbeReport f_n_probe(const SpaceParams& params, double a, double b, int N, double p);

} // namespace bergman
