#pragma once

#include <functional>
#include <span>
#include <vector>

#include "tpjc/state.hpp"
#include "tpjc/types.hpp"

namespace tpjc {

// Representation the numeric propagation works in. The lab frame keeps the
// Hamiltonian time-independent (eigendecomposition applies); the interaction
// frame strips the free diagonal and moves it into explicit phases, which
// forces stepwise integration of a time-dependent generator.
enum class Frame { lab, interaction };

enum class PropagatorKind { automatic, eigendecomposition, adaptive_step };

struct IntegrationConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    // Step-size ceiling for the adaptive integrator, in units of 1/nu where
    // nu is the fastest frequency in the generator; resolve with
    // absolute_max_step.
    double max_step = 0.05;
    // Allowed |  ||psi||^2 - 1  | before the run is declared broken.
    double norm_drift_limit = 1e-7;
    Frame frame = Frame::lab;
    PropagatorKind propagator = PropagatorKind::automatic;

    // Throws std::invalid_argument on non-positive tolerances or a drift
    // limit tighter than 10x rel_tol (which the integrator could not honour).
    void validate() const;

    double absolute_max_step(double nu) const;
};

// States sampled on the requested time grid, in the same flat layout the
// Hamiltonian builders use. Kept as raw vectors plus one shared FockCutoffs
// rather than per-point CompositeState to avoid re-validating thousands of
// samples.
struct Trajectory {
    std::vector<double> times;
    std::vector<StateVector> states;
    FockCutoffs cutoffs{1, 3, 0};

    double population(size_t sample, Level level) const;
    CompositeState state_at(size_t sample) const;
};

// Propagates i d/dt psi = H psi for a time-independent Hermitian H, sampling
// at t_grid (strictly increasing; psi0 is the state at t_grid.front()).
// The default path diagonalizes H once and applies exact phases; the
// adaptive path integrates with an embedded Runge-Kutta pair under the
// configured tolerances and step ceiling. Norm drift beyond the configured
// limit raises IntegrationError carrying the offending time.
Trajectory integrate_schrodinger(const Operator& h, const CompositeState& psi0,
                                 std::span<const double> t_grid,
                                 const IntegrationConfig& config = {},
                                 double nu = 1.0);

// Time-dependent variant; h_of_t must return the generator at the given
// time. Only the adaptive path applies.
Trajectory integrate_schrodinger_td(const std::function<Operator(double)>& h_of_t,
                                    const CompositeState& psi0,
                                    std::span<const double> t_grid,
                                    const IntegrationConfig& config = {},
                                    double nu = 1.0);

// Interaction-frame generator obtained from a lab Hamiltonian and its free
// diagonal E: the diagonal is removed and the remainder is dressed with the
// free phases, H_I(t)_{jk} = (H - diag E)_{jk} exp(i (E_j - E_k) t).
Operator interaction_frame_hamiltonian(const Operator& lab_h,
                                       const Eigen::VectorXd& free_energies,
                                       double t);

// Convenience form for the full model: builds the lab Hamiltonian and its
// free diagonal from the parameters and rotates. At t = 0 this is exactly
// the lab-frame coupling term. Rebuilds the operator on every call; for
// integration capture the lab pieces once and use the overload above.
Operator interaction_frame_hamiltonian(const SystemParams& params,
                                       const FockCutoffs& cutoffs, double t);

} // namespace tpjc
