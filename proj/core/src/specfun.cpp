#include "tpjc/specfun.hpp"

#include <cmath>

namespace tpjc {

double laguerre(int n, double x) {
    if (n < 0) {
        throw std::invalid_argument("laguerre: order must be non-negative");
    }
    if (!std::isfinite(x)) {
        throw std::domain_error("laguerre: argument must be finite");
    }
    if (x < 0.0) {
        throw std::domain_error("laguerre: argument must be non-negative");
    }
    if (n == 0) return 1.0;

    double lkm1 = 1.0;       // L_0
    double lk = 1.0 - x;     // L_1
    for (int k = 1; k < n; ++k) {
        const double lkp1 = ((2.0 * k + 1.0 - x) * lk - k * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

double coupling_f(int m, double eta) {
    if (m < 0) {
        throw std::invalid_argument("coupling_f: Fock index must be non-negative");
    }
    if (!std::isfinite(eta)) {
        throw std::domain_error("coupling_f: eta must be finite");
    }
    if (eta < 0.0) {
        throw std::domain_error("coupling_f: eta must be non-negative");
    }
    const double x = eta * eta;
    return std::exp(-0.5 * x) * laguerre(m, x);
}

double f_series_oracle(int m, double eta) {
    if (m < 0) {
        throw std::invalid_argument("f_series_oracle: Fock index must be non-negative");
    }
    if (!std::isfinite(eta) || eta < 0.0) {
        throw std::domain_error("f_series_oracle: eta must be finite and non-negative");
    }
    const double x = eta * eta;
    // term_k = (-1)^k x^k m! / ((k!)^2 (m-k)!); successive terms differ by
    // a factor -x (m-k) / (k+1)^2, which keeps every intermediate bounded.
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < m; ++k) {
        term *= -x * static_cast<double>(m - k) / ((k + 1.0) * (k + 1.0));
        sum += term;
    }
    return std::exp(-0.5 * x) * sum;
}

Complex coherent_weight(int k, Complex alpha) {
    if (k < 0) {
        throw std::invalid_argument("coherent_weight: Fock index must be non-negative");
    }
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
        throw std::domain_error("coherent_weight: alpha must be finite");
    }
    const double mag = std::abs(alpha);
    if (mag == 0.0) {
        return (k == 0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    }
    const double log_mag =
        -0.5 * mag * mag + k * std::log(mag) - 0.5 * std::lgamma(k + 1.0);
    return std::polar(std::exp(log_mag), k * std::arg(alpha));
}

CouplingProfile::CouplingProfile(double eta, int m_max) : m_eta(eta) {
    if (m_max < 0) {
        throw std::invalid_argument("CouplingProfile: m_max must be non-negative");
    }
    if (!std::isfinite(eta) || eta < 0.0) {
        throw std::domain_error("CouplingProfile: eta must be finite and non-negative");
    }
    m_values.resize(m_max + 1);
    const double x = eta * eta;
    const double damp = std::exp(-0.5 * x);
    // Run the Laguerre recurrence once and damp every row.
    double lkm1 = 1.0;
    double lk = 1.0 - x;
    m_values[0] = damp;
    if (m_max >= 1) m_values[1] = damp * lk;
    for (int k = 1; k < m_max; ++k) {
        const double lkp1 = ((2.0 * k + 1.0 - x) * lk - k * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
        m_values[k + 1] = damp * lk;
    }
}

double CouplingProfile::operator()(int m) const {
    if (m < 0 || m >= static_cast<int>(m_values.size())) {
        throw std::out_of_range("CouplingProfile: index outside tabulated range");
    }
    return m_values[m];
}

} // namespace tpjc
