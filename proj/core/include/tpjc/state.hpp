#pragma once

#include "tpjc/params.hpp"
#include "tpjc/types.hpp"

namespace tpjc {

// Initial condition of one bosonic mode: either a Fock state |k> or a
// coherent state |alpha>.
struct ModePrep {
    enum class Kind { fock, coherent };

    Kind kind = Kind::fock;
    int fock = 0;
    Complex alpha = 0.0;

    static ModePrep fock_state(int k);
    static ModePrep coherent_state(Complex a);

    // Amplitude on Fock level k for this preparation.
    Complex amplitude(int k) const;
};

// Full product preparation |motion> x |field> x |level>.
struct Preparation {
    ModePrep motion = ModePrep::fock_state(0);
    ModePrep field = ModePrep::fock_state(0);
    Level level = Level::e;
};

// A normalized vector on the composite space (motion x field x electronic)
// together with the truncation that defines its basis and the time stamp at
// which it holds. Construction enforces unit norm to within 1e-9 and then
// renormalizes exactly, so downstream population sums are stable.
class CompositeState {
public:
    CompositeState(StateVector amplitudes, FockCutoffs cutoffs, double time = 0.0);

    const StateVector& amplitudes() const { return m_amps; }
    const FockCutoffs& cutoffs() const { return m_cutoffs; }
    double time() const { return m_time; }

    Complex amplitude(int m, int n, Level level) const;

    // Probability of finding the ion in the given electronic level.
    double population(Level level) const;

    // Occupation probability of motional Fock level m, traced over the rest.
    double motion_population(int m) const;

    // Occupation probability of field Fock level n, traced over the rest.
    double field_population(int n) const;

private:
    StateVector m_amps;
    FockCutoffs m_cutoffs;
    double m_time;
};

// Builds the truncated initial state for a product preparation. Coherent
// tails cut off by the basis are measured first: if the lost probability
// exceeds leakage_eps the function throws TruncationError, otherwise the
// vector is renormalized and the deficit is reported through *deficit_out
// when provided.
CompositeState prepare_initial_state(const Preparation& prep,
                                     const FockCutoffs& cutoffs,
                                     double leakage_eps = 1e-10,
                                     double* deficit_out = nullptr);

} // namespace tpjc
