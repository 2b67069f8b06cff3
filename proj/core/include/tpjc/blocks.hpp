#pragma once

#include "tpjc/types.hpp"

namespace tpjc {

// Dimensionless couplings of one invariant two-state block of the effective
// model. With the atom starting in |e> and the modes in Fock levels (m, n),
// the dynamics closes on {|e; m, n>, |g; m, n+2>}:
//   chi1 = f^2(m) (n+1) / r     Stark shift of |e; m, n>
//   chi2 = f^2(m) sqrt((n+1)(n+2))   two-photon flip amplitude
//   chi3 = f^2(m) (n+2) r       Stark shift of |g; m, n+2>
// in units of the two-photon rate g1 g2 / delta, with r = g1 / g2. Time
// enters as tau = (g1 g2 / delta) t.
struct ChiCoefficients {
    double chi1;
    double chi2;
    double chi3;
};

ChiCoefficients chi_coefficients(int m, int n, double eta, double r);

// One block with its flopping frequency Lambda = sqrt((chi3-chi1)^2 + 4 chi2^2)
// and the initial amplitude a0 of its |e> component.
struct BlockCoefficients {
    int m;
    int n;
    double coupling_ratio;  // r = g1 / g2
    double chi1;
    double chi2;
    double chi3;
    double lambda;
    Complex a0 = Complex(1.0, 0.0);

    static BlockCoefficients make(int m, int n, double eta, double r,
                                  Complex a0 = Complex(1.0, 0.0));
};

// Amplitudes (a, b) on (|e; m, n>, |g; m, n+2>).
struct BlockAmplitudes {
    Complex a;
    Complex b;
};

// Published closed-form solution for equal couplings (r = 1) and b(0) = 0:
//   a(tau) = a0 [cos(L tau/2) + i ((chi3-chi1)/L) sin(L tau/2)]
//   b(tau) = -2 i a0 (chi2 / L) sin(L tau/2)
// with L = Lambda and a0 taken from the block. The overall phase
// exp(-i (chi1+chi3) tau / 2) is dropped, matching the form the populations
// are usually quoted in; it cancels in |a|^2 and |b|^2. Throws
// std::invalid_argument unless coupling_ratio == 1 to machine tolerance.
BlockAmplitudes evolve_block_closed_form(const BlockCoefficients& block,
                                         double tau);

// Exact propagator of the 2x2 block Hamiltonian [[chi1, chi2], [chi2, chi3]]
// for arbitrary r and arbitrary initial amplitudes, global phase included.
// Agrees with evolve_block_closed_form up to that phase when r = 1, b0 = 0.
BlockAmplitudes evolve_block_general(const BlockCoefficients& block, double tau,
                                     Complex a0, Complex b0);

} // namespace tpjc
