#include "tpjc/evolve.hpp"

#include <cmath>

#include <boost/numeric/odeint.hpp>
#include <boost/numeric/odeint/external/eigen/eigen.hpp>

#include "eigensolve.hpp"
#include "tpjc/operators.hpp"

namespace boost::numeric::odeint {

// The generic Eigen adapter types the infinity norm with the matrix scalar,
// which is complex for our state vectors; the step-size controller needs the
// real norm, so pin the result type for this one instantiation.
template <>
struct vector_space_norm_inf<tpjc::StateVector> {
    typedef double result_type;
    double operator()(const tpjc::StateVector& m) const {
        return m.lpNorm<Eigen::Infinity>();
    }
};

} // namespace boost::numeric::odeint

namespace tpjc {

namespace {

void check_time_grid(std::span<const double> t_grid) {
    if (t_grid.empty()) {
        throw std::invalid_argument("integrate: time grid must not be empty");
    }
    for (size_t j = 0; j < t_grid.size(); ++j) {
        if (!std::isfinite(t_grid[j])) {
            throw std::invalid_argument("integrate: time grid must be finite");
        }
        if (j > 0 && !(t_grid[j] > t_grid[j - 1])) {
            throw std::invalid_argument("integrate: time grid must be strictly increasing");
        }
    }
}

void check_norm(const StateVector& x, double t, double limit) {
    const double drift = std::abs(x.squaredNorm() - 1.0);
    if (drift > limit) {
        throw IntegrationError("integrate: norm drift exceeded the configured limit", t);
    }
}

Trajectory propagate_by_eigendecomposition(const Operator& h,
                                           const CompositeState& psi0,
                                           std::span<const double> t_grid,
                                           const IntegrationConfig& config) {
    Trajectory out;
    out.times.assign(t_grid.begin(), t_grid.end());
    out.cutoffs = psi0.cutoffs();
    out.states.resize(t_grid.size());

    Eigen::VectorXd vals;
    Operator vecs;
    detail::hermitian_eigensolve(h, vals, vecs);
    const StateVector c0 = vecs.adjoint() * psi0.amplitudes();

    const int n = static_cast<int>(h.rows());
    const int total = static_cast<int>(t_grid.size());
    const double t0 = t_grid.front();
    const Complex minus_i(0.0, -1.0);

    // One matrix product per chunk of sample times instead of one
    // matrix-vector product per sample.
    constexpr int kChunk = 256;
    Operator phased(n, std::min(kChunk, total));
    for (int start = 0; start < total; start += kChunk) {
        const int cols = std::min(kChunk, total - start);
        for (int j = 0; j < cols; ++j) {
            const double dt = t_grid[start + j] - t0;
            for (int k = 0; k < n; ++k) {
                phased(k, j) = std::exp(minus_i * (vals[k] * dt)) * c0[k];
            }
        }
        const Operator block = vecs * phased.leftCols(cols);
        for (int j = 0; j < cols; ++j) {
            out.states[start + j] = block.col(j);
            check_norm(out.states[start + j], t_grid[start + j],
                       config.norm_drift_limit);
        }
    }
    return out;
}

template <typename System>
Trajectory propagate_by_adaptive_step(System&& system, const CompositeState& psi0,
                                      std::span<const double> t_grid,
                                      const IntegrationConfig& config, double nu) {
    namespace ode = boost::numeric::odeint;
    using Stepper = ode::runge_kutta_fehlberg78<StateVector, double, StateVector,
                                                double, ode::vector_space_algebra>;
    auto controlled = ode::make_controlled(config.abs_tol, config.rel_tol, Stepper());

    Trajectory out;
    out.times.assign(t_grid.begin(), t_grid.end());
    out.cutoffs = psi0.cutoffs();
    out.states.reserve(t_grid.size());

    const double cap = config.absolute_max_step(nu);
    StateVector x = psi0.amplitudes();
    double t = t_grid.front();
    double dt = cap;

    check_norm(x, t, config.norm_drift_limit);
    out.states.push_back(x);

    for (size_t j = 1; j < t_grid.size(); ++j) {
        const double target = t_grid[j];
        const double tiny = 1e-12 * std::max(1.0, std::abs(target));
        int rejections_in_a_row = 0;
        while (target - t > tiny) {
            dt = std::min(dt, cap);
            if (t + dt > target) dt = target - t;
            if (controlled.try_step(system, x, t, dt) == ode::fail) {
                if (++rejections_in_a_row > 1000) {
                    throw IntegrationError("integrate: step size collapsed", t);
                }
            } else {
                rejections_in_a_row = 0;
            }
        }
        check_norm(x, t, config.norm_drift_limit);
        out.states.push_back(x);
    }
    return out;
}

} // namespace

void IntegrationConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw std::invalid_argument("IntegrationConfig: tolerances must be positive");
    }
    if (!(max_step > 0.0)) {
        throw std::invalid_argument("IntegrationConfig: max_step must be positive");
    }
    // The integrator cannot certify norm conservation tighter than the local
    // error it is allowed to make.
    if (!(norm_drift_limit >= 10.0 * rel_tol)) {
        throw std::invalid_argument(
            "IntegrationConfig: norm_drift_limit must be at least 10x rel_tol");
    }
}

double IntegrationConfig::absolute_max_step(double nu) const {
    if (!(nu > 0.0) || !std::isfinite(nu)) {
        throw std::invalid_argument("IntegrationConfig: nu must be positive and finite");
    }
    return max_step / nu;
}

double Trajectory::population(size_t sample, Level level) const {
    if (sample >= states.size()) {
        throw std::out_of_range("Trajectory: sample index out of range");
    }
    const StateVector& x = states[sample];
    double p = 0.0;
    for (int i = static_cast<int>(level); i < x.size(); i += kLevels) {
        p += std::norm(x[i]);
    }
    return p;
}

CompositeState Trajectory::state_at(size_t sample) const {
    if (sample >= states.size()) {
        throw std::out_of_range("Trajectory: sample index out of range");
    }
    return CompositeState(states[sample], cutoffs, times[sample]);
}

Trajectory integrate_schrodinger(const Operator& h, const CompositeState& psi0,
                                 std::span<const double> t_grid,
                                 const IntegrationConfig& config, double nu) {
    config.validate();
    check_time_grid(t_grid);
    if (h.rows() != h.cols() || h.rows() != psi0.amplitudes().size()) {
        throw std::invalid_argument("integrate: Hamiltonian and state dimensions differ");
    }
    if (config.propagator == PropagatorKind::adaptive_step) {
        const Complex minus_i(0.0, -1.0);
        auto system = [&h, minus_i](const StateVector& x, StateVector& dxdt, double) {
            dxdt.noalias() = h * x;
            dxdt *= minus_i;
        };
        return propagate_by_adaptive_step(system, psi0, t_grid, config, nu);
    }
    return propagate_by_eigendecomposition(h, psi0, t_grid, config);
}

Trajectory integrate_schrodinger_td(const std::function<Operator(double)>& h_of_t,
                                    const CompositeState& psi0,
                                    std::span<const double> t_grid,
                                    const IntegrationConfig& config, double nu) {
    config.validate();
    check_time_grid(t_grid);
    if (!h_of_t) {
        throw std::invalid_argument("integrate: missing Hamiltonian callback");
    }
    if (config.propagator == PropagatorKind::eigendecomposition) {
        throw std::invalid_argument(
            "integrate: a time-dependent generator cannot use the eigendecomposition path");
    }
    const Complex minus_i(0.0, -1.0);
    auto system = [&h_of_t, minus_i](const StateVector& x, StateVector& dxdt, double t) {
        dxdt.noalias() = h_of_t(t) * x;
        dxdt *= minus_i;
    };
    return propagate_by_adaptive_step(system, psi0, t_grid, config, nu);
}

Operator interaction_frame_hamiltonian(const Operator& lab_h,
                                       const Eigen::VectorXd& free_energies,
                                       double t) {
    if (lab_h.rows() != lab_h.cols() || lab_h.rows() != free_energies.size()) {
        throw std::invalid_argument(
            "interaction_frame_hamiltonian: dimension mismatch");
    }
    const int n = static_cast<int>(lab_h.rows());
    StateVector phases(n);
    for (int k = 0; k < n; ++k) {
        phases[k] = std::polar(1.0, free_energies[k] * t);
    }
    Operator coupling = lab_h;
    coupling -= free_energies.cast<Complex>().asDiagonal();
    return phases.asDiagonal() * coupling * phases.conjugate().asDiagonal();
}

Operator interaction_frame_hamiltonian(const SystemParams& params,
                                       const FockCutoffs& cutoffs, double t) {
    const Operator lab = build_full_hamiltonian(params, cutoffs);
    const Eigen::VectorXd free = build_free_diagonal(params, cutoffs);
    return interaction_frame_hamiltonian(lab, free, t);
}

} // namespace tpjc
