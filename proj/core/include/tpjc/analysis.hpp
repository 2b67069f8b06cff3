#pragma once

#include <span>
#include <vector>

namespace tpjc {

// How periodic a uniformly sampled series is, as the best normalized
// autocorrelation over lags in [lag_min, lag_max] (same units as dt): the
// series is mean-removed once, then for each candidate lag the overlapping
// head and tail segments are correlated and normalized by their own norms.
// Returns a value in [-1, 1]; 1 means some lag reproduces the series
// exactly. A constant series scores 0.
double periodicity_score(std::span<const double> values, double dt,
                         double lag_min, double lag_max);

// Sliding-window peak-to-trough amplitude: out[i] is max - min of values
// over samples within window/2 of tau[i]. tau must be uniform and have at
// least two points.
std::vector<double> oscillation_envelope(std::span<const double> values,
                                         std::span<const double> tau,
                                         double window);

struct EnvelopePeak {
    double tau;
    double height;
};

// Local maxima of an envelope at least min_height tall and min_separation
// apart; of two close maxima the taller one wins.
std::vector<EnvelopePeak> find_envelope_peaks(std::span<const double> env,
                                              std::span<const double> tau,
                                              double min_height,
                                              double min_separation);

} // namespace tpjc
