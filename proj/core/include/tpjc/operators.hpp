#pragma once

#include "tpjc/params.hpp"
#include "tpjc/types.hpp"

namespace tpjc {

// Kronecker product, with A varying slowest. All composite operators in this
// library are built as kron(motion, kron(field, electronic)) to match
// FockCutoffs::flatten.
Operator kron(const Operator& a, const Operator& b);

// Bosonic lowering operator on a dim-dimensional Fock space:
// <k-1| a |k> = sqrt(k).
Operator build_ladder(int dim);

// Number operator a^dag a as a diagonal matrix.
Operator build_number(int dim);

// cos(eta (a + a^dag)) restricted to the lowest m_max Fock states, evaluated
// spectrally on a space enlarged by pad extra states so the retained block is
// converged. The result is re-symmetrized to remove truncation asymmetry at
// machine level; rows within ~5 of the cutoff still feel the boundary and
// should not be trusted to better than the pad allows. eta = 0 returns the
// exact identity.
Operator build_cos_position(double eta, int m_max, int pad = 20);

// Free (diagonal) part of the lab-frame Hamiltonian: trap + cavity + internal
// energies, ordered like FockCutoffs::flatten.
Eigen::VectorXd build_free_diagonal(const SystemParams& params,
                                    const FockCutoffs& cutoffs);

// Full nonlinear Hamiltonian: free part plus the standing-wave coupling
//   (g1 |g><r| + g2 |r><e|) b^dag cos(eta (a + a^dag)) + h.c.
// Hermiticity of the assembled matrix is asserted to 1e-12.
Operator build_full_hamiltonian(const SystemParams& params,
                                const FockCutoffs& cutoffs);

// Carrier-approximation Hamiltonian: the cosine is replaced by its diagonal
// f(a^dag a), so the motional number is conserved exactly.
Operator build_carrier_hamiltonian(const SystemParams& params,
                                   const FockCutoffs& cutoffs);

// Effective two-photon Hamiltonian after eliminating the intermediate level:
// free part plus motional-number-dependent Stark shifts
//   (g2^2/delta) f^2(a^dag a) b b^dag  on |e>,
//   (g1^2/delta) f^2(a^dag a) b^dag b  on |g>,
// plus the two-photon flip (g1 g2/delta) f^2(a^dag a) b^dag^2 |g><e| + h.c.
// The intermediate level keeps only its free energy and stays decoupled.
// Requires delta != 0 (domain error otherwise).
Operator build_effective_hamiltonian(const SystemParams& params,
                                     const FockCutoffs& cutoffs);

} // namespace tpjc
