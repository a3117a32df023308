#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wake {

// Uniformly sampled single-channel motion record m(n) = v(n) + i(n).
struct MotionSignal {
    std::vector<double> samples;
    double fs = 0.0;
    std::string label;

    std::size_t size() const { return samples.size(); }
};

// A contiguous slice of length L (or 2^J) ending at some absolute sample.
struct SignalWindow {
    std::vector<double> values;
    std::size_t start_index = 0;
    double fs = 0.0;

    std::size_t size() const { return values.size(); }
};

// Tunable parameters of the extraction pipeline. Defaults follow the
// settings selected in the reference evaluation (5 s window, 5 levels,
// AR order 17, sym3).
struct WakeConfig {
    double window_seconds = 5.0;
    int levels = 5;               // wavelet decomposition depth J
    int ar_order = 17;            // AR model order p
    std::string wavelet = "sym3";
    double q_scale = 1e-4;        // Kalman process noise = q_scale * var(window)
    int psd_grid = 1024;
    double cutoff_lo = 1.5;       // valley search band, Hz
    double cutoff_hi = 0.0;       // <= 0 means fs/4
    bool cutoff_fallback = true;  // fall back to band-edge argmin when no valley

    std::size_t window_length(double fs) const;
    std::pair<double, double> cutoff_band(double fs) const;
    // Throws std::invalid_argument when the combination is unusable.
    void validate(double fs) const;
};

// One emitted sample of a processing run. i_pred is stored as the
// computed difference m - v_pred, so the three columns always
// reconstruct each other bit-exactly.
struct SampleOutput {
    std::int64_t n = 0;  // absolute 0-based sample index
    double m = 0.0;
    double v_pred = 0.0;
    double i_pred = 0.0;
    double f_d_active = 0.0;
};

// CSV reader for `index,ch0[,ch1,...]` rows. The sampling rate comes from
// a `# fs=<Hz>` header line unless fs_override > 0.
MotionSignal load_csv(const std::string& path, int column = 0, double fs_override = 0.0);

// Writes `n, m, v_pred, i_pred, f_d_active` rows at 17 significant digits
// (round-trips IEEE doubles exactly), plus `# fs=` and column-name headers.
void save_run(std::span<const SampleOutput> rows, const std::string& path, double fs);

// Samples n-length+1 .. n of the signal, in order.
SignalWindow make_window(const MotionSignal& signal, std::size_t n, std::size_t length);

double mean(std::span<const double> x);
// Population variance (1/N normalization).
double variance(std::span<const double> x);

}  // namespace wake
