#pragma once

#include "bergman/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bergman {

/// Acceptance-suite configuration. Tolerances default to the pinned
/// acceptance values; the lattice can be restricted to one (alpha, beta)
/// pair for a focused run.
struct VerifyConfig {
    int n_radial = 200;
    int n_angular = 256;
    std::uint64_t seed = 12345;
    std::optional<double> restrict_alpha;
    std::optional<double> restrict_beta;

    double tol_reproducing = 1e-8;
    double tol_projection_rel = 1e-8;
    double tol_projection_zero = 1e-12;
    double tol_gram = 1e-12;
    double tol_h_identities = 1e-10;
    double tol_density_fd = 1e-3;
    double tol_pe_slack = 1e-12;
    double tol_disc_area = 1e-4;
    double tol_radial_distance = 1e-3;
    double tol_toeplitz_additivity = 1e-12;
    double tol_toeplitz_adjoint = 1e-10;
    double tol_toeplitz_mult = 1e-8;
    double tol_compact_tail = 1e-3;
    double min_identity_tail = 0.99;
    double tol_berezin_boundary = 0.05;
    double tol_iomega_exponent = 0.05;
    double tol_iomega_log = 0.10;
    double max_iomega_bounded_ratio = 2.0;
    double tol_carleson_identity = 1e-6;
    double tol_berezin_one = 1e-8;
    double max_eq41_factor = 2.0;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string details;
};

/// Runs the full acceptance suite; one result per criterion.
std::vector<CriterionResult> run_acceptance(const VerifyConfig& cfg);

} // namespace bergman
