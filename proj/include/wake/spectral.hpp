#pragma once

#include <span>
#include <vector>

#include "wake/signal.hpp"

namespace wake::spectral {

// AR(p) model fitted by Levinson-Durbin. The spectrum denominator is
// |1 + sum_u coefficients[u-1] e^{-j 2 pi f u}|^2.
struct ArModel {
    std::vector<double> coefficients;
    double noise_variance = 0.0;
    int order = 0;
};

struct PsdEstimate {
    std::vector<double> frequencies;  // Hz, ascending over [0, fs/2]
    std::vector<double> power;
    ArModel model;
};

struct CutoffFrequency {
    double f_d = 0.0;
    double valley_power = 0.0;
    double band_lo = 0.0;
    double band_hi = 0.0;
    bool fallback_used = false;  // no interior valley; band-edge argmin taken
};

// Biased estimate: gamma(tau) = (1/L) sum_n x(n) x(n+tau), tau = 0..max_lag.
std::vector<double> autocorrelation(const SignalWindow& window, int max_lag);

// Solves the order-p Yule-Walker equations. Throws on gamma(0) <= 0 or a
// singular recursion step (reflection coefficient magnitude reaching 1).
ArModel levinson_durbin(std::span<const double> autocorr, int order);

// AR power spectrum on `grid_size` evenly spaced frequencies over [0, fs/2].
PsdEstimate yule_walker_psd(const SignalWindow& window, int order, int grid_size);

// Picks the cut-off frequency f_d: the smallest-power interior local
// minimum inside the band, else (when allowed) the band argmin.
CutoffFrequency detect_cutoff(const PsdEstimate& psd, double band_lo, double band_hi,
                              bool fallback_to_band_edge = true);

// FFT mask filter: zeroes every bin with |frequency| <= cutoff_hz and
// inverse-transforms. Output is real and the same length as the input.
SignalWindow sharp_highpass(const SignalWindow& window, double cutoff_hz);

}  // namespace wake::spectral
