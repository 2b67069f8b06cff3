#include "tpjc/params.hpp"

#include <cmath>

namespace tpjc {

void SystemParams::validate() const {
    const bool finite = std::isfinite(nu) && std::isfinite(omega_c) &&
                        std::isfinite(delta) && std::isfinite(g1) &&
                        std::isfinite(g2) && std::isfinite(eta);
    if (!finite) {
        throw std::invalid_argument("SystemParams: all fields must be finite");
    }
    if (nu <= 0.0) {
        throw std::invalid_argument("SystemParams: nu must be positive");
    }
    if (omega_c <= 0.0) {
        throw std::invalid_argument("SystemParams: omega_c must be positive");
    }
    // Zero couplings are allowed so that decoupled configurations stay
    // expressible; the effective model then yields no dynamics.
    if (g1 < 0.0 || g2 < 0.0) {
        throw std::invalid_argument("SystemParams: couplings must be non-negative");
    }
    if (eta < 0.0) {
        throw std::invalid_argument("SystemParams: eta must be non-negative");
    }
}

double SystemParams::coupling_ratio() const {
    if (g2 <= 0.0) {
        throw std::domain_error("SystemParams: coupling_ratio requires g2 > 0");
    }
    return g1 / g2;
}

double SystemParams::two_photon_coupling() const {
    if (delta == 0.0) {
        throw std::domain_error("SystemParams: two_photon_coupling requires delta != 0");
    }
    return g1 * g2 / delta;
}

void FockCutoffs::validate() const {
    if (m_max < 1) {
        throw std::invalid_argument("FockCutoffs: m_max must be at least 1");
    }
    // The field must hold at least |0>, |1>, |2> for the two-photon ladder
    // to exist at all.
    if (n_max < 3) {
        throw std::invalid_argument("FockCutoffs: n_max must be at least 3");
    }
    if (pad < 0) {
        throw std::invalid_argument("FockCutoffs: pad must be non-negative");
    }
}

int FockCutoffs::flatten(int m, int n, Level level) const {
    return (m * n_max + n) * kLevels + static_cast<int>(level);
}

} // namespace tpjc
