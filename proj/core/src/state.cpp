#include "tpjc/state.hpp"

#include <cmath>

#include "tpjc/specfun.hpp"

namespace tpjc {

ModePrep ModePrep::fock_state(int k) {
    if (k < 0) {
        throw std::invalid_argument("ModePrep: Fock index must be non-negative");
    }
    ModePrep p;
    p.kind = Kind::fock;
    p.fock = k;
    return p;
}

ModePrep ModePrep::coherent_state(Complex a) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw std::invalid_argument("ModePrep: coherent amplitude must be finite");
    }
    ModePrep p;
    p.kind = Kind::coherent;
    p.alpha = a;
    return p;
}

Complex ModePrep::amplitude(int k) const {
    if (kind == Kind::fock) {
        return (k == fock) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    }
    return coherent_weight(k, alpha);
}

CompositeState::CompositeState(StateVector amplitudes, FockCutoffs cutoffs,
                               double time)
    : m_amps(std::move(amplitudes)), m_cutoffs(cutoffs), m_time(time) {
    m_cutoffs.validate();
    if (m_amps.size() != m_cutoffs.dim()) {
        throw std::invalid_argument("CompositeState: vector length does not match cutoffs");
    }
    const double norm2 = m_amps.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-9) {
        throw std::invalid_argument("CompositeState: vector is not normalized");
    }
    m_amps /= std::sqrt(norm2);
}

Complex CompositeState::amplitude(int m, int n, Level level) const {
    if (m < 0 || m >= m_cutoffs.m_max || n < 0 || n >= m_cutoffs.n_max) {
        throw std::out_of_range("CompositeState: Fock index outside truncation");
    }
    return m_amps[m_cutoffs.flatten(m, n, level)];
}

double CompositeState::population(Level level) const {
    double p = 0.0;
    const int s = static_cast<int>(level);
    for (int i = s; i < m_amps.size(); i += kLevels) {
        p += std::norm(m_amps[i]);
    }
    return p;
}

double CompositeState::motion_population(int m) const {
    if (m < 0 || m >= m_cutoffs.m_max) {
        throw std::out_of_range("CompositeState: motional index outside truncation");
    }
    double p = 0.0;
    const int base = m * m_cutoffs.n_max * kLevels;
    for (int i = 0; i < m_cutoffs.n_max * kLevels; ++i) {
        p += std::norm(m_amps[base + i]);
    }
    return p;
}

double CompositeState::field_population(int n) const {
    if (n < 0 || n >= m_cutoffs.n_max) {
        throw std::out_of_range("CompositeState: field index outside truncation");
    }
    double p = 0.0;
    for (int m = 0; m < m_cutoffs.m_max; ++m) {
        for (int s = 0; s < kLevels; ++s) {
            p += std::norm(m_amps[m_cutoffs.flatten(m, n, static_cast<Level>(s))]);
        }
    }
    return p;
}

CompositeState prepare_initial_state(const Preparation& prep,
                                     const FockCutoffs& cutoffs,
                                     double leakage_eps,
                                     double* deficit_out) {
    cutoffs.validate();
    if (leakage_eps < 0.0) {
        throw std::invalid_argument("prepare_initial_state: leakage_eps must be non-negative");
    }
    if (prep.motion.kind == ModePrep::Kind::fock && prep.motion.fock >= cutoffs.m_max) {
        throw TruncationError("prepare_initial_state: motional Fock level outside truncation", 1.0);
    }
    if (prep.field.kind == ModePrep::Kind::fock && prep.field.fock >= cutoffs.n_max) {
        throw TruncationError("prepare_initial_state: field Fock level outside truncation", 1.0);
    }

    StateVector amps = StateVector::Zero(cutoffs.dim());
    double kept = 0.0;
    for (int m = 0; m < cutoffs.m_max; ++m) {
        const Complex cm = prep.motion.amplitude(m);
        if (cm == Complex(0.0, 0.0)) continue;
        for (int n = 0; n < cutoffs.n_max; ++n) {
            const Complex cn = prep.field.amplitude(n);
            if (cn == Complex(0.0, 0.0)) continue;
            const Complex c = cm * cn;
            amps[cutoffs.flatten(m, n, prep.level)] = c;
            kept += std::norm(c);
        }
    }

    const double deficit = 1.0 - kept;
    if (deficit > leakage_eps) {
        throw TruncationError(
            "prepare_initial_state: truncation loses more probability than allowed",
            deficit);
    }
    if (deficit_out) *deficit_out = deficit;
    amps /= std::sqrt(kept);
    return CompositeState(std::move(amps), cutoffs, 0.0);
}

} // namespace tpjc
