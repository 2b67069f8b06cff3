#include "tpjc/pg_series.hpp"

#include <cmath>

#include "tpjc/blocks.hpp"
#include "tpjc/specfun.hpp"

namespace tpjc {

namespace {

// Neumaier-compensated accumulator; the block sum spans hundreds of terms of
// wildly different size and the acceptance tolerances sit near 1e-12.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + comp; }
};

// Smallest dimension whose Poisson(lambda) tail mass is below eps, i.e.
// P(X >= dim) < eps. The tail is summed from above so no 1 - CDF
// cancellation enters.
int poisson_dimension(double lambda, double eps) {
    if (lambda == 0.0) return 1;
    auto tail = [lambda](int k) {
        // log p_k, then sum forward until the remainder is negligible.
        double log_pk = -lambda + k * std::log(lambda) - std::lgamma(k + 1.0);
        double term = std::exp(log_pk);
        double acc = 0.0;
        for (int j = k; term > 0.0 && (j < k + 8 || term > acc * 1e-18); ++j) {
            acc += term;
            term *= lambda / (j + 1.0);
        }
        return acc;
    };
    int k = std::max(1, static_cast<int>(std::ceil(lambda)));
    while (tail(k) >= eps) {
        ++k;
        if (k > 100000) {
            throw std::runtime_error("truncation_bounds: Poisson tail did not converge");
        }
    }
    return k;
}

int mode_dimension(const ModePrep& mode, double eps) {
    if (mode.kind == ModePrep::Kind::fock) {
        return mode.fock + 1;
    }
    return poisson_dimension(std::norm(mode.alpha), eps);
}

} // namespace

FockCutoffs truncation_bounds(const Preparation& prep, double eps) {
    if (!(eps > 0.0) || !(eps < 1.0)) {
        throw std::invalid_argument("truncation_bounds: eps must lie in (0, 1)");
    }
    FockCutoffs cutoffs;
    cutoffs.m_max = std::max(1, mode_dimension(prep.motion, eps));
    // +2: the flip reaches two photons above the topmost occupied level.
    cutoffs.n_max = std::max(3, mode_dimension(prep.field, eps) + 2);
    cutoffs.pad = 20;
    cutoffs.validate();
    return cutoffs;
}

PgSeries pg_series(const SystemParams& params, const Preparation& prep,
                   std::span<const double> tau_grid, double eps) {
    params.validate();
    if (prep.level != Level::e) {
        throw std::invalid_argument("pg_series: preparation must start in the upper level");
    }

    PgSeries out;
    out.tau.assign(tau_grid.begin(), tau_grid.end());
    out.cutoffs = truncation_bounds(prep, eps);
    out.values.assign(tau_grid.size(), 0.0);

    // Raw (unrenormalized) weights of the truncated preparation.
    std::vector<double> w_motion(out.cutoffs.m_max);
    for (int m = 0; m < out.cutoffs.m_max; ++m) {
        w_motion[m] = std::norm(prep.motion.amplitude(m));
    }
    // Field weights only need the occupied levels; the ladder headroom rows
    // start empty.
    const int n_occupied = out.cutoffs.n_max - 2;
    std::vector<double> w_field(n_occupied);
    for (int n = 0; n < n_occupied; ++n) {
        w_field[n] = std::norm(prep.field.amplitude(n));
    }

    CompensatedSum kept;
    for (double wm : w_motion) {
        for (double wn : w_field) {
            kept.add(wm * wn);
        }
    }
    out.truncation_deficit = 1.0 - kept.value();

    out.truncation_warning = out.truncation_deficit > eps;

    if (params.g1 == 0.0 || params.g2 == 0.0) {
        // Either leg missing: the upper level cannot reach the ground state.
        out.model_tag = "effective-closed-form";
        return out;
    }
    if (params.delta == 0.0) {
        throw std::domain_error("pg_series: delta must be non-zero when both couplings act");
    }

    const double r = params.coupling_ratio();
    const bool equal_couplings = std::abs(r - 1.0) <= 1e-12;
    out.model_tag = equal_couplings ? "effective-closed-form" : "effective-general-r";

    std::vector<CompensatedSum> acc(tau_grid.size());
    for (int m = 0; m < out.cutoffs.m_max; ++m) {
        if (w_motion[m] == 0.0) continue;
        for (int n = 0; n < n_occupied; ++n) {
            const double w = w_motion[m] * w_field[n];
            if (w == 0.0) continue;
            const BlockCoefficients block =
                BlockCoefficients::make(m, n, params.eta, equal_couplings ? 1.0 : r);
            for (size_t t = 0; t < tau_grid.size(); ++t) {
                const BlockAmplitudes amps =
                    equal_couplings
                        ? evolve_block_closed_form(block, tau_grid[t])
                        : evolve_block_general(block, tau_grid[t], Complex(1.0, 0.0),
                                               Complex(0.0, 0.0));
                acc[t].add(w * std::norm(amps.b));
            }
        }
    }
    for (size_t t = 0; t < tau_grid.size(); ++t) {
        out.values[t] = acc[t].value();
    }
    return out;
}

} // namespace tpjc
