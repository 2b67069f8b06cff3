#pragma once

#include <span>
#include <vector>

#include "tpjc/evolve.hpp"
#include "tpjc/params.hpp"
#include "tpjc/state.hpp"

namespace tpjc {

// Side-by-side populations of the three model tiers on a common grid of
// dimensionless times tau = (g1 g2 / delta) t, plus the summary deviations
// the approximation analysis needs. All fields are finite.
struct ComparisonReport {
    std::vector<double> tau;
    std::vector<double> pg_full, pr_full, pe_full;
    std::vector<double> pg_carrier, pr_carrier, pe_carrier;
    std::vector<double> pg_effective;

    double max_dev_full_effective = 0.0;
    double max_dev_carrier_effective = 0.0;
    double max_dev_full_carrier = 0.0;
    double max_pr_full = 0.0;
    double max_pr_carrier = 0.0;

    // Regime descriptors: delta / max(g1, g2) and nu / |delta| (0 when the
    // denominator vanishes).
    double ratio_delta_g = 0.0;
    double ratio_nu_delta = 0.0;

    FockCutoffs cutoffs{1, 3, 0};
    double truncation_deficit = 0.0;
};

// Runs the full, carrier, and effective models from the same preparation and
// assembles a ComparisonReport. The numeric models get extra motional
// headroom beyond the preparation's own support because the standing-wave
// coupling spreads population upward; the field needs none beyond the
// two-photon ladder since total excitation is conserved.
ComparisonReport compare_models(const SystemParams& params, const Preparation& prep,
                                std::span<const double> tau_grid,
                                const IntegrationConfig& config = {},
                                double eps = 1e-10);

} // namespace tpjc
