#include "tpjc/operators.hpp"

#include <cmath>

#include "tpjc/specfun.hpp"

namespace tpjc {

namespace {

Operator level_projector(Level i, Level j) {
    Operator s = Operator::Zero(kLevels, kLevels);
    s(static_cast<int>(i), static_cast<int>(j)) = 1.0;
    return s;
}

void assert_hermitian(const Operator& h, const char* what) {
    const double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (dev > 1e-12) {
        throw std::logic_error(std::string(what) + ": assembled matrix is not Hermitian");
    }
}

// Shared assembly for the full and carrier models: only the motional factor
// of the coupling differs (cosine matrix vs its Fock diagonal).
Operator assemble_lab_hamiltonian(const SystemParams& params,
                                  const FockCutoffs& cutoffs,
                                  const Operator& motion_factor) {
    const Operator b = build_ladder(cutoffs.n_max);
    const Operator raise_atom =
        params.g1 * level_projector(Level::g, Level::r) +
        params.g2 * level_projector(Level::r, Level::e);

    Operator h = build_free_diagonal(params, cutoffs).asDiagonal();
    const Operator coupling =
        kron(motion_factor, kron(b.adjoint(), raise_atom));
    h += coupling + coupling.adjoint();
    return h;
}

} // namespace

Operator kron(const Operator& a, const Operator& b) {
    Operator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Operator build_ladder(int dim) {
    if (dim < 1) {
        throw std::invalid_argument("build_ladder: dimension must be positive");
    }
    Operator a = Operator::Zero(dim, dim);
    for (int k = 1; k < dim; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return a;
}

Operator build_number(int dim) {
    if (dim < 1) {
        throw std::invalid_argument("build_number: dimension must be positive");
    }
    Operator n = Operator::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        n(k, k) = static_cast<double>(k);
    }
    return n;
}

Operator build_cos_position(double eta, int m_max, int pad) {
    if (m_max < 1) {
        throw std::invalid_argument("build_cos_position: m_max must be positive");
    }
    if (pad < 0) {
        throw std::invalid_argument("build_cos_position: pad must be non-negative");
    }
    if (!std::isfinite(eta) || eta < 0.0) {
        throw std::domain_error("build_cos_position: eta must be finite and non-negative");
    }
    if (eta == 0.0) {
        return Operator::Identity(m_max, m_max);
    }

    const int big = m_max + pad;
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(big, big);
    for (int k = 1; k < big; ++k) {
        const double v = eta * std::sqrt(static_cast<double>(k));
        x(k - 1, k) = v;
        x(k, k - 1) = v;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(x);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("build_cos_position: eigendecomposition failed");
    }
    const Eigen::MatrixXd& v = solver.eigenvectors();
    const Eigen::VectorXd c = solver.eigenvalues().array().cos();
    Eigen::MatrixXd cos_big = v * c.asDiagonal() * v.transpose();

    Eigen::MatrixXd cos_trunc = cos_big.topLeftCorner(m_max, m_max);
    cos_trunc = 0.5 * (cos_trunc + cos_trunc.transpose()).eval();
    return cos_trunc.cast<Complex>();
}

Eigen::VectorXd build_free_diagonal(const SystemParams& params,
                                    const FockCutoffs& cutoffs) {
    params.validate();
    cutoffs.validate();
    const double level_energy[kLevels] = {params.energy_g(), params.energy_r(),
                                          params.energy_e()};
    Eigen::VectorXd diag(cutoffs.dim());
    for (int m = 0; m < cutoffs.m_max; ++m) {
        for (int n = 0; n < cutoffs.n_max; ++n) {
            for (int s = 0; s < kLevels; ++s) {
                diag[cutoffs.flatten(m, n, static_cast<Level>(s))] =
                    params.nu * m + params.omega_c * n + level_energy[s];
            }
        }
    }
    return diag;
}

Operator build_full_hamiltonian(const SystemParams& params,
                                const FockCutoffs& cutoffs) {
    params.validate();
    cutoffs.validate();
    const Operator cos_op = build_cos_position(params.eta, cutoffs.m_max, cutoffs.pad);
    Operator h = assemble_lab_hamiltonian(params, cutoffs, cos_op);
    assert_hermitian(h, "build_full_hamiltonian");
    return h;
}

Operator build_carrier_hamiltonian(const SystemParams& params,
                                   const FockCutoffs& cutoffs) {
    params.validate();
    cutoffs.validate();
    const CouplingProfile f(params.eta, cutoffs.m_max - 1);
    Operator diag_f = Operator::Zero(cutoffs.m_max, cutoffs.m_max);
    for (int m = 0; m < cutoffs.m_max; ++m) {
        diag_f(m, m) = f(m);
    }
    Operator h = assemble_lab_hamiltonian(params, cutoffs, diag_f);
    assert_hermitian(h, "build_carrier_hamiltonian");
    return h;
}

Operator build_effective_hamiltonian(const SystemParams& params,
                                     const FockCutoffs& cutoffs) {
    params.validate();
    cutoffs.validate();
    if (params.delta == 0.0) {
        throw std::domain_error(
            "build_effective_hamiltonian: delta must be non-zero to eliminate the intermediate level");
    }

    const CouplingProfile f(params.eta, cutoffs.m_max - 1);
    const double shift_e = params.g2 * params.g2 / params.delta;
    const double shift_g = params.g1 * params.g1 / params.delta;
    const double flip = params.g1 * params.g2 / params.delta;

    // Free part of the eliminated model: the intermediate level keeps only
    // its trap and cavity energy (it never partakes in the dynamics), while
    // g and e sit symmetrically at -/+ omega_c.
    Eigen::VectorXd diag(cutoffs.dim());
    const double level_energy[kLevels] = {-params.omega_c, 0.0, params.omega_c};
    for (int m = 0; m < cutoffs.m_max; ++m) {
        for (int n = 0; n < cutoffs.n_max; ++n) {
            for (int s = 0; s < kLevels; ++s) {
                diag[cutoffs.flatten(m, n, static_cast<Level>(s))] =
                    params.nu * m + params.omega_c * n + level_energy[s];
            }
        }
    }
    Operator h = diag.asDiagonal();
    for (int m = 0; m < cutoffs.m_max; ++m) {
        const double f2 = f(m) * f(m);
        for (int n = 0; n < cutoffs.n_max; ++n) {
            h(cutoffs.flatten(m, n, Level::e), cutoffs.flatten(m, n, Level::e)) +=
                shift_e * f2 * (n + 1.0);
            h(cutoffs.flatten(m, n, Level::g), cutoffs.flatten(m, n, Level::g)) +=
                shift_g * f2 * n;
            if (n + 2 < cutoffs.n_max) {
                const double amp =
                    flip * f2 * std::sqrt((n + 1.0) * (n + 2.0));
                h(cutoffs.flatten(m, n + 2, Level::g), cutoffs.flatten(m, n, Level::e)) += amp;
                h(cutoffs.flatten(m, n, Level::e), cutoffs.flatten(m, n + 2, Level::g)) += amp;
            }
        }
    }
    assert_hermitian(h, "build_effective_hamiltonian");
    return h;
}

} // namespace tpjc
