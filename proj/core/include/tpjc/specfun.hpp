#pragma once

#include <vector>

#include "tpjc/types.hpp"

namespace tpjc {

// Laguerre polynomial L_n(x), evaluated with the upward three-term recurrence
//   (k+1) L_{k+1}(x) = (2k+1-x) L_k(x) - k L_{k-1}(x),
// which is numerically stable for x >= 0.
//
// Throws std::invalid_argument for n < 0 and std::domain_error for x < 0 or
// non-finite x.
double laguerre(int n, double x);

// Motional matrix element of the carrier-coupling operator on Fock state |m>:
//   f(m) = exp(-eta^2 / 2) * L_m(eta^2).
// Satisfies f(m) = 1 exactly at eta = 0 and |f(m)| <= 1 for all m >= 0.
//
// Throws std::invalid_argument for m < 0 and std::domain_error for eta < 0
// or non-finite eta.
double coupling_f(int m, double eta);

// Same quantity as coupling_f, but computed from the explicit finite series
//   f(m) = exp(-eta^2/2) * sum_{k=0}^{m} (-1)^k eta^{2k} / (k!)^2 * m!/(m-k)!
// with terms accumulated through their ratio so no factorial overflows.
// Kept as an independent cross-check of the recurrence; prefer coupling_f.
double f_series_oracle(int m, double eta);

// Fock-basis amplitude <k|alpha> of a coherent state, computed in log space
// so large k and large |alpha| cannot overflow:
//   <k|alpha> = exp(-|alpha|^2/2) alpha^k / sqrt(k!).
// alpha = 0 returns exactly 1 for k = 0 and exactly 0 otherwise.
//
// Throws std::invalid_argument for k < 0 and std::domain_error for
// non-finite alpha.
Complex coherent_weight(int k, Complex alpha);

// Memoized table of coupling_f(m) for m = 0..m_max, for the inner loops that
// would otherwise re-run the Laguerre recurrence per matrix element.
class CouplingProfile {
public:
    CouplingProfile(double eta, int m_max);

    double eta() const { return m_eta; }
    int m_max() const { return static_cast<int>(m_values.size()) - 1; }

    double operator()(int m) const;

    const std::vector<double>& values() const { return m_values; }

private:
    double m_eta;
    std::vector<double> m_values;
};

} // namespace tpjc
