#include "tpjc/blocks.hpp"

#include <cmath>

#include "tpjc/specfun.hpp"

namespace tpjc {

ChiCoefficients chi_coefficients(int m, int n, double eta, double r) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("chi_coefficients: Fock indices must be non-negative");
    }
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::domain_error("chi_coefficients: coupling ratio must be positive and finite");
    }
    const double f = coupling_f(m, eta);
    const double f2 = f * f;
    return ChiCoefficients{
        f2 * (n + 1.0) / r,
        f2 * std::sqrt((n + 1.0) * (n + 2.0)),
        f2 * (n + 2.0) * r,
    };
}

BlockCoefficients BlockCoefficients::make(int m, int n, double eta, double r,
                                          Complex a0) {
    const ChiCoefficients chi = chi_coefficients(m, n, eta, r);
    BlockCoefficients block;
    block.m = m;
    block.n = n;
    block.coupling_ratio = r;
    block.chi1 = chi.chi1;
    block.chi2 = chi.chi2;
    block.chi3 = chi.chi3;
    block.lambda = std::hypot(chi.chi3 - chi.chi1, 2.0 * chi.chi2);
    block.a0 = a0;
    return block;
}

BlockAmplitudes evolve_block_closed_form(const BlockCoefficients& block,
                                         double tau) {
    if (std::abs(block.coupling_ratio - 1.0) > 1e-12) {
        throw std::invalid_argument(
            "evolve_block_closed_form: only valid for equal couplings (r = 1)");
    }
    // f(m) can vanish at a Laguerre zero, freezing the block entirely.
    if (block.lambda == 0.0) {
        return BlockAmplitudes{block.a0, Complex(0.0, 0.0)};
    }
    const double half = 0.5 * block.lambda * tau;
    const double c = std::cos(half);
    const double s = std::sin(half);
    const double detune = (block.chi3 - block.chi1) / block.lambda;
    const double rabi = 2.0 * block.chi2 / block.lambda;
    return BlockAmplitudes{
        block.a0 * Complex(c, detune * s),
        block.a0 * Complex(0.0, -rabi * s),
    };
}

BlockAmplitudes evolve_block_general(const BlockCoefficients& block, double tau,
                                     Complex a0, Complex b0) {
    const double mean = 0.5 * (block.chi1 + block.chi3);
    const Complex phase = std::polar(1.0, -mean * tau);
    if (block.lambda == 0.0) {
        return BlockAmplitudes{phase * a0, phase * b0};
    }
    const double half = 0.5 * block.lambda * tau;
    const double c = std::cos(half);
    const double s = std::sin(half);
    // exp(-i H tau) = exp(-i mean tau) [cos(L tau/2) - i sin(L tau/2) (2/L)(H - mean)]
    const double dz = (block.chi1 - block.chi3) / block.lambda;  // traceless diagonal / (L/2)
    const double dx = 2.0 * block.chi2 / block.lambda;
    const Complex uaa(c, -dz * s);
    const Complex ubb(c, dz * s);
    const Complex uab(0.0, -dx * s);
    return BlockAmplitudes{
        phase * (uaa * a0 + uab * b0),
        phase * (uab * a0 + ubb * b0),
    };
}

} // namespace tpjc
