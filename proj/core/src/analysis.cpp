#include "tpjc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tpjc {

double periodicity_score(std::span<const double> values, double dt,
                         double lag_min, double lag_max) {
    if (values.size() < 4) {
        throw std::invalid_argument("periodicity_score: series too short");
    }
    if (!(dt > 0.0) || !(lag_min > 0.0) || !(lag_max >= lag_min)) {
        throw std::invalid_argument("periodicity_score: invalid lag window");
    }
    const size_t n = values.size();
    // An exactly constant series carries no period; catch it before the mean
    // subtraction, whose rounding residue would otherwise correlate perfectly.
    if (std::all_of(values.begin(), values.end(),
                    [&](double v) { return v == values.front(); })) {
        return 0.0;
    }
    const double mean =
        std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    std::vector<double> s(n);
    for (size_t i = 0; i < n; ++i) s[i] = values[i] - mean;

    const double total = std::inner_product(s.begin(), s.end(), s.begin(), 0.0);
    if (total <= 0.0) return 0.0;

    const long lag_lo = std::max(1L, std::lround(lag_min / dt));
    const long lag_hi = std::min(static_cast<long>(n) - 2, std::lround(lag_max / dt));
    double best = -1.0;
    for (long lag = lag_lo; lag <= lag_hi; ++lag) {
        const size_t len = n - static_cast<size_t>(lag);
        double num = 0.0, head = 0.0, tail = 0.0;
        for (size_t i = 0; i < len; ++i) {
            num += s[i] * s[i + lag];
            head += s[i] * s[i];
            tail += s[i + lag] * s[i + lag];
        }
        const double den = std::sqrt(head * tail);
        if (den > 0.0) best = std::max(best, num / den);
    }
    return best;
}

std::vector<double> oscillation_envelope(std::span<const double> values,
                                         std::span<const double> tau,
                                         double window) {
    if (values.size() != tau.size() || tau.size() < 2) {
        throw std::invalid_argument("oscillation_envelope: need matching grids with >= 2 points");
    }
    if (!(window > 0.0)) {
        throw std::invalid_argument("oscillation_envelope: window must be positive");
    }
    const double dt = tau[1] - tau[0];
    if (!(dt > 0.0)) {
        throw std::invalid_argument("oscillation_envelope: tau must be increasing");
    }
    const long n = static_cast<long>(values.size());
    const long hw = std::max(1L, std::lround(window / dt / 2.0));
    std::vector<double> env(values.size());
    for (long i = 0; i < n; ++i) {
        const long a = std::max(0L, i - hw);
        const long b = std::min(n, i + hw + 1);
        const auto [lo, hi] =
            std::minmax_element(values.begin() + a, values.begin() + b);
        env[i] = *hi - *lo;
    }
    return env;
}

std::vector<EnvelopePeak> find_envelope_peaks(std::span<const double> env,
                                              std::span<const double> tau,
                                              double min_height,
                                              double min_separation) {
    if (env.size() != tau.size()) {
        throw std::invalid_argument("find_envelope_peaks: grid size mismatch");
    }
    std::vector<size_t> kept;
    double last_tau = -std::numeric_limits<double>::infinity();
    for (size_t i = 1; i + 1 < env.size(); ++i) {
        const bool local_max = env[i] >= env[i - 1] && env[i] > env[i + 1];
        if (!local_max || env[i] < min_height) continue;
        if (tau[i] - last_tau >= min_separation) {
            kept.push_back(i);
            last_tau = tau[i];
        } else if (!kept.empty() && env[i] > env[kept.back()]) {
            kept.back() = i;
            last_tau = tau[i];
        }
    }
    std::vector<EnvelopePeak> peaks;
    peaks.reserve(kept.size());
    for (size_t i : kept) {
        peaks.push_back(EnvelopePeak{tau[i], env[i]});
    }
    return peaks;
}

} // namespace tpjc
