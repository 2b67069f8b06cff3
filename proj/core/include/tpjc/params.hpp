#pragma once

#include "tpjc/types.hpp"

namespace tpjc {

// Physical parameters of the trapped three-level ion coupled to one cavity
// mode. All quantities are angular frequencies in a common unit; eta is the
// dimensionless Lamb-Dicke parameter.
//
// The cascade levels are placed symmetrically about zero in the rotating
// frame used throughout:
//   E_g = -omega_c,  E_r = -delta,  E_e = +omega_c,
// which encodes two-photon resonance (E_e - E_g = 2 omega_c) and makes delta
// the one-photon detuning of the intermediate level from either leg.
struct SystemParams {
    double nu;       // trap frequency (> 0)
    double omega_c;  // cavity frequency (> 0)
    double delta;    // intermediate-level detuning
    double g1;       // coupling of leg g <-> r (>= 0)
    double g2;       // coupling of leg r <-> e (>= 0)
    double eta;      // Lamb-Dicke parameter (>= 0)

    // Throws std::invalid_argument when any field is outside its range.
    void validate() const;

    double energy_g() const { return -omega_c; }
    double energy_r() const { return -delta; }
    double energy_e() const { return omega_c; }

    // r = g1 / g2; requires g2 > 0.
    double coupling_ratio() const;

    // Effective two-photon rate g = g1 g2 / delta; requires delta != 0.
    double two_photon_coupling() const;
};

// Basis truncation for the two bosonic modes. The composite Hilbert space is
// (motion: 0..m_max-1) x (field: 0..n_max-1) x (3 electronic levels), so
// m_max and n_max count retained states, not highest indices.
//
// pad is extra motional headroom used only while diagonalizing the position
// operator inside the cosine construction; it is discarded afterwards.
struct FockCutoffs {
    int m_max;
    int n_max;
    int pad = 20;

    void validate() const;

    int dim() const { return m_max * n_max * kLevels; }

    // Flat index of |m> x |n> x |level| under the row-major (m, n, level)
    // layout used by every operator builder in this library.
    int flatten(int m, int n, Level level) const;
};

} // namespace tpjc
