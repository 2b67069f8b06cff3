#pragma once

#include <vector>

#include "tpjc/params.hpp"

namespace tpjc::testing {

inline std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    }
    return grid;
}

// A physically sensible parameter set; tests override individual fields.
inline SystemParams base_params() {
    SystemParams p;
    p.nu = 1.0;
    p.omega_c = 1.0;
    p.delta = 10.0;
    p.g1 = 1.0;
    p.g2 = 1.0;
    p.eta = 0.0;
    return p;
}

// Deterministic pseudo-random stream for property tests (no global state).
class Lcg {
public:
    explicit Lcg(unsigned long long seed) : m_state(seed) {}

    double uniform() {
        m_state = m_state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(m_state >> 11) / 9007199254740992.0;
    }

private:
    unsigned long long m_state;
};

} // namespace tpjc::testing
