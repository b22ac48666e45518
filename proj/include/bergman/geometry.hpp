#pragma once

#include "bergman/kernel.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/types.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace bergman {

/// Density rho of the kernel-induced metric, rho^2 = d^2 log K(z,z) / dz dzbar,
/// in the closed H-form. Requires beta in (-1, 0]; the beta = 0 branch is the
/// exact limit sqrt(alpha+2)/(1-|z|^2).
double metric_density(const SpaceParams& params, Complex z);
double metric_density_sq_t(const SpaceParams& params, double t);  // t = |z|^2

/// |rho^2(z) - (1/4) Laplacian(log K(z,z))| with a five-point stencil and one
/// Richardson step; the finite-difference oracle for the closed form.
double density_vs_log_kernel_check(const SpaceParams& params, Complex z, double h = 1e-3);

/// psi_z(w) = (z - w) / (1 - conj(z) w).
Complex mobius(Complex z, Complex w);

/// atanh |psi_p(q)|, the distance of the density 1/(1-|z|^2).
double poincare_distance(Complex p, Complex q);

/// Length of a polyline in the rho-metric: composite midpoint rule with
/// segment bisection until the relative change drops below 1e-8.
double curve_length(const std::vector<Complex>& pts, const SpaceParams& params);

/// Cubic-Hermite interpolant of rho along the radius (rho depends on |z|
/// only). Used by the grid machinery; public evaluation stays on the exact
/// series.
class RadialDensity {
public:
    RadialDensity(const SpaceParams& params, double r_max, int n = 2048);
    double rho(double r) const;

private:
    double smax_, ds_;
    ArrayXd phi_, slope_;  // phi(s) = rho(tanh s) (1 - tanh^2 s)
};

struct GridConfig {
    int n_radial = 400;
    int n_angular = 512;
    double r_max = 0.995;
    bool refine = true;   // one resolution doubling
    bool smooth = true;   // local polyline descent after the graph search
};

/// Polar graph over the disk with a 16-neighbour stencil; rings are uniform
/// in s = atanh(r). Edge weights are rho(midpoint) times Euclidean length.
class MetricGrid {
public:
    MetricGrid(const SpaceParams& params, const GridConfig& cfg);

    const SpaceParams& params() const { return params_; }
    const RadialDensity& density_table() const { return rho_; }
    double r_max() const { return cfg_.r_max; }

    /// Two-point shortest path (A* with the rigorous Poincare lower bound as
    /// heuristic). Optionally returns the node polyline.
    double graph_distance(Complex p, Complex q, std::vector<Complex>* path = nullptr) const;

    /// Single-source distances from p to every grid node.
    VectorXd distances_from(Complex p) const;

    /// Distance read-off for an off-grid point against a distances_from field.
    double distance_to_point(const VectorXd& dist, Complex w) const;

private:
    SpaceParams params_;
    GridConfig cfg_;
    RadialDensity rho_;
    double ds_;
    int R_, A_;

    int node_count() const { return 1 + R_ * A_; }
    Complex position(int id) const;
    double edge_weight(Complex a, Complex b) const;
    void neighbor_ids(int id, std::vector<int>& out) const;
    std::vector<std::pair<int, double>> link_point(Complex p) const;

    friend class BergmanDisc;
};

/// Metric-ball data: the Poincare bracket radii and the closed-form area
/// bounds of the classical comparison discs.
struct DiscBounds {
    double tau1 = 0.0, tau2 = 0.0;
    Complex center1, center2;
    double radius1 = 0.0, radius2 = 0.0;
    double area_lower = 0.0, area_upper = 0.0;  // normalized-area two-sided bounds
};

/// Metric ball D(z, r) with bracket short-circuit membership and ray-based
/// integration. Membership in the bracket annulus is decided by a lazy
/// single-source graph distance field from the center.
class BergmanDisc {
public:
    BergmanDisc(const SpaceParams& params, Complex z, double r,
                GridConfig membership_grid = disc_grid_defaults());

    static GridConfig disc_grid_defaults() {
        GridConfig g;
        g.n_radial = 200;
        g.n_angular = 256;
        g.refine = false;
        g.smooth = false;
        return g;
    }

    const DiscBounds& bounds() const { return bounds_; }
    Complex center() const { return z_; }
    double radius() const { return r_; }

    /// d(z, w) < r, short-circuited through the bracket; closed_boundary
    /// switches to <= for atom bookkeeping.
    bool contains(Complex w, bool closed_boundary = false) const;

    double measure() const;  // mu_{alpha,beta}(D)
    double integral_mu(const std::function<double(Complex)>& f) const;
    double integral_area(const std::function<double(Complex)>& f) const;

    /// Member points for sampling scans (ray grid restricted to the disc).
    std::vector<Complex> sample_points(int per_ray = 8) const;

private:
    SpaceParams params_;
    Complex z_;
    double r_;
    DiscBounds bounds_;
    GridConfig gcfg_;
    int n_rays_ = 128;
    int n_radial_nodes_ = 48;
    bool origin_mode_ = false;  // integrate in origin-centered polar coordinates
    Complex ray_center_;

    mutable std::shared_ptr<MetricGrid> grid_;
    mutable std::shared_ptr<VectorXd> dist_;

    double graph_distance_from_center(Complex w) const;
    double boundary_radius(double theta) const;
    double ray_integral(double theta, const std::function<double(Complex)>& f,
                        bool mu_weight) const;
};

double disc_measure(const SpaceParams& params, Complex z, double r);

struct DistanceResult {
    double value = 0.0;
    double error = 0.0;        // heuristic accuracy estimate of the graph value
    double bracket_lo = 0.0;   // sqrt(alpha+2) * poincare
    double bracket_hi = 0.0;   // sqrt((alpha+2+beta)/(1+beta)) * poincare
    double graph_coarse = 0.0;
    double graph_fine = 0.0;
};

/// Shortest-path distance with the rigorous Poincare bracket. Throws an
/// accuracy_error when the computed interval misses the bracket.
DistanceResult distance(Complex p, Complex q, const SpaceParams& params,
                        const GridConfig& cfg = {});

struct KernelInfimumResult {
    double inf_normalized_kernel_sq = 0.0;
    double disc_measure = 0.0;
    double product = 0.0;
};

/// inf over disc samples of |k^z_2(w)|^2 times mu(D(z,r)); bounded below by
/// a positive constant on zero-free parameter sets.
KernelInfimumResult kernel_infimum_check(Complex z, double r, const SpaceParams& params,
                                         const DiskRule& rule);

/// The three-sum Cauchy-Schwarz inequality of the metric subharmonicity
/// argument, for integer alpha, beta in (-1, 0], any real x.
bool cauchy_schwarz_check(int alpha, double beta, double x);

} // namespace bergman
