#include "tpjc/compare.hpp"

#include <algorithm>
#include <cmath>

#include "tpjc/operators.hpp"
#include "tpjc/pg_series.hpp"

namespace tpjc {

namespace {

// Extra motional states for the numeric models on top of the preparation's
// support. The cosine scatters a few quanta up and down; eight states of
// headroom hold the leakage far below the comparison tolerances for
// Lamb-Dicke parameters up to ~0.5.
constexpr int kMotionHeadroom = 8;

Trajectory run_model(const Operator& lab_h, const SystemParams& params,
                     const FockCutoffs& cutoffs, const CompositeState& psi0,
                     std::span<const double> t_grid,
                     const IntegrationConfig& config) {
    if (config.frame == Frame::interaction) {
        const Eigen::VectorXd free = build_free_diagonal(params, cutoffs);
        auto h_of_t = [&lab_h, &free](double t) {
            return interaction_frame_hamiltonian(lab_h, free, t);
        };
        return integrate_schrodinger_td(h_of_t, psi0, t_grid, config, params.nu);
    }
    return integrate_schrodinger(lab_h, psi0, t_grid, config, params.nu);
}

} // namespace

ComparisonReport compare_models(const SystemParams& params, const Preparation& prep,
                                std::span<const double> tau_grid,
                                const IntegrationConfig& config, double eps) {
    params.validate();
    config.validate();
    if (tau_grid.empty()) {
        throw std::invalid_argument("compare_models: tau grid must not be empty");
    }

    ComparisonReport report;
    report.tau.assign(tau_grid.begin(), tau_grid.end());

    // Effective model first: it also fixes the preparation-driven cutoffs.
    const PgSeries eff = pg_series(params, prep, tau_grid, eps);
    report.pg_effective = eff.values;
    report.truncation_deficit = eff.truncation_deficit;

    FockCutoffs cutoffs = eff.cutoffs;
    if (params.eta > 0.0) {
        cutoffs.m_max += kMotionHeadroom;
    }
    report.cutoffs = cutoffs;

    // Map tau back to lab time. Without a two-photon rate the dynamics is
    // trivial in the effective picture and tau is taken as lab time directly.
    const bool coupled = params.g1 > 0.0 && params.g2 > 0.0;
    const double g_eff = coupled ? params.two_photon_coupling() : 0.0;
    std::vector<double> t_grid(tau_grid.size());
    for (size_t j = 0; j < tau_grid.size(); ++j) {
        t_grid[j] = (g_eff != 0.0) ? tau_grid[j] / g_eff : tau_grid[j];
    }

    // Each mode's tail is below eps by construction of the cutoffs, but the
    // product state can lose up to the sum of both tails; budget accordingly.
    const CompositeState psi0 = prepare_initial_state(prep, cutoffs, 2.0 * eps);
    const Operator h_full = build_full_hamiltonian(params, cutoffs);
    const Operator h_carrier = build_carrier_hamiltonian(params, cutoffs);
    const Trajectory traj_full = run_model(h_full, params, cutoffs, psi0, t_grid, config);
    const Trajectory traj_carrier =
        run_model(h_carrier, params, cutoffs, psi0, t_grid, config);

    const size_t count = tau_grid.size();
    report.pg_full.resize(count);
    report.pr_full.resize(count);
    report.pe_full.resize(count);
    report.pg_carrier.resize(count);
    report.pr_carrier.resize(count);
    report.pe_carrier.resize(count);

    for (size_t j = 0; j < count; ++j) {
        report.pg_full[j] = traj_full.population(j, Level::g);
        report.pr_full[j] = traj_full.population(j, Level::r);
        report.pe_full[j] = traj_full.population(j, Level::e);
        report.pg_carrier[j] = traj_carrier.population(j, Level::g);
        report.pr_carrier[j] = traj_carrier.population(j, Level::r);
        report.pe_carrier[j] = traj_carrier.population(j, Level::e);

        report.max_dev_full_effective =
            std::max(report.max_dev_full_effective,
                     std::abs(report.pg_full[j] - report.pg_effective[j]));
        report.max_dev_carrier_effective =
            std::max(report.max_dev_carrier_effective,
                     std::abs(report.pg_carrier[j] - report.pg_effective[j]));
        report.max_dev_full_carrier =
            std::max(report.max_dev_full_carrier,
                     std::abs(report.pg_full[j] - report.pg_carrier[j]));
        report.max_pr_full = std::max(report.max_pr_full, report.pr_full[j]);
        report.max_pr_carrier = std::max(report.max_pr_carrier, report.pr_carrier[j]);
    }

    const double g_max = std::max(params.g1, params.g2);
    report.ratio_delta_g = (g_max > 0.0) ? params.delta / g_max : 0.0;
    report.ratio_nu_delta =
        (params.delta != 0.0) ? params.nu / std::abs(params.delta) : 0.0;
    return report;
}

} // namespace tpjc
