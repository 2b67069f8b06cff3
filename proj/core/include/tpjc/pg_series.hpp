#pragma once

#include <span>
#include <string>
#include <vector>

#include "tpjc/params.hpp"
#include "tpjc/state.hpp"
#include "tpjc/types.hpp"

namespace tpjc {

// Ground-state population of the effective model on a grid of dimensionless
// times tau = (g1 g2 / delta) t. Weights come from the truncated preparation
// and are deliberately left unrenormalized, so values sum against 1 minus
// truncation_deficit; the deficit is reported instead of hidden.
struct PgSeries {
    std::vector<double> tau;
    std::vector<double> values;
    double truncation_deficit = 0.0;
    bool truncation_warning = false;  // deficit exceeded the requested eps
    FockCutoffs cutoffs{1, 3, 0};
    std::string model_tag;  // "effective-closed-form" or "effective-general-r"
};

// Smallest Fock cutoffs that keep the preparation's truncation deficit below
// eps in each mode. Fock preparations are captured exactly; coherent modes
// get the smallest dimension whose Poisson tail is below eps. The field
// cutoff always carries two extra states so the two-photon ladder out of the
// topmost occupied level stays representable.
FockCutoffs truncation_bounds(const Preparation& prep, double eps);

// Sums the closed-form block solutions into P_g(tau). The preparation must
// start in |e>; motion and field may each be Fock or coherent. Equal
// couplings route through the published closed form, unequal couplings
// through the general block propagator. Zero couplings yield P_g = 0.
// Requires delta != 0 whenever g1 g2 > 0.
PgSeries pg_series(const SystemParams& params, const Preparation& prep,
                   std::span<const double> tau_grid, double eps = 1e-10);

} // namespace tpjc
