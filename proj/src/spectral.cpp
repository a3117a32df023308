#include "wake/spectral.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "wake/fft.hpp"

namespace wake::spectral {

std::vector<double> autocorrelation(const SignalWindow& window, int max_lag) {
    const auto& x = window.values;
    const std::size_t L = x.size();
    if (max_lag < 0) throw std::invalid_argument("autocorrelation: negative max_lag");
    if (static_cast<std::size_t>(max_lag) >= L)
        throw std::invalid_argument("autocorrelation: max_lag must be < window length");
    std::vector<double> gamma(static_cast<std::size_t>(max_lag) + 1, 0.0);
    for (std::size_t tau = 0; tau <= static_cast<std::size_t>(max_lag); ++tau) {
        double s = 0.0;
        for (std::size_t n = 0; n + tau < L; ++n) s += x[n] * x[n + tau];
        gamma[tau] = s / static_cast<double>(L);
    }
    return gamma;
}

ArModel levinson_durbin(std::span<const double> autocorr, int order) {
    if (order < 1) throw std::invalid_argument("levinson_durbin: order must be >= 1");
    if (autocorr.size() < static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("levinson_durbin: need order+1 autocorrelation lags");
    if (!(autocorr[0] > 0.0))
        throw std::invalid_argument("levinson_durbin: gamma(0) must be positive");

    std::vector<double> a(static_cast<std::size_t>(order), 0.0);
    std::vector<double> prev(a.size(), 0.0);
    double err = autocorr[0];
    for (int m = 1; m <= order; ++m) {
        double acc = autocorr[static_cast<std::size_t>(m)];
        for (int i = 1; i < m; ++i)
            acc += a[static_cast<std::size_t>(i - 1)] * autocorr[static_cast<std::size_t>(m - i)];
        const double k = -acc / err;
        if (std::abs(k) >= 1.0 - 1e-14)
            throw std::runtime_error("levinson_durbin: singular recursion step at order " +
                                     std::to_string(m));
        prev = a;
        a[static_cast<std::size_t>(m - 1)] = k;
        for (int i = 1; i < m; ++i)
            a[static_cast<std::size_t>(i - 1)] =
                prev[static_cast<std::size_t>(i - 1)] + k * prev[static_cast<std::size_t>(m - i - 1)];
        err *= 1.0 - k * k;
    }
    ArModel model;
    model.coefficients = std::move(a);
    model.noise_variance = err;
    model.order = order;
    return model;
}

PsdEstimate yule_walker_psd(const SignalWindow& window, int order, int grid_size) {
    if (grid_size < 2) throw std::invalid_argument("yule_walker_psd: grid_size must be >= 2");
    if (window.size() <= static_cast<std::size_t>(order))
        throw std::invalid_argument("yule_walker_psd: window length must exceed the AR order");
    const auto gamma = autocorrelation(window, order);
    PsdEstimate psd;
    psd.model = levinson_durbin(gamma, order);
    psd.frequencies.resize(static_cast<std::size_t>(grid_size));
    psd.power.resize(static_cast<std::size_t>(grid_size));
    const double fs = window.fs;
    for (int i = 0; i < grid_size; ++i) {
        const double f = (fs / 2.0) * static_cast<double>(i) / static_cast<double>(grid_size - 1);
        std::complex<double> denom(1.0, 0.0);
        for (int u = 1; u <= psd.model.order; ++u) {
            const double ang = -2.0 * std::numbers::pi * (f / fs) * static_cast<double>(u);
            denom += psd.model.coefficients[static_cast<std::size_t>(u - 1)] *
                     std::complex<double>(std::cos(ang), std::sin(ang));
        }
        psd.frequencies[static_cast<std::size_t>(i)] = f;
        psd.power[static_cast<std::size_t>(i)] = psd.model.noise_variance / std::norm(denom);
    }
    return psd;
}

CutoffFrequency detect_cutoff(const PsdEstimate& psd, double band_lo, double band_hi,
                              bool fallback_to_band_edge) {
    const auto& f = psd.frequencies;
    const auto& p = psd.power;
    if (f.size() < 2 || f.size() != p.size())
        throw std::invalid_argument("detect_cutoff: malformed PSD");
    if (!(band_lo < band_hi) || band_lo < f.front() || band_hi > f.back())
        throw std::invalid_argument("detect_cutoff: band outside the PSD frequency range");

    std::size_t lo = 0;
    while (f[lo] < band_lo) ++lo;
    std::size_t hi = f.size() - 1;
    while (f[hi] > band_hi) --hi;
    if (lo >= hi) throw std::invalid_argument("detect_cutoff: band narrower than the grid step");

    // Smallest-power local minimum strictly inside the band.
    bool found = false;
    std::size_t best = lo;
    for (std::size_t i = lo + 1; i < hi; ++i) {
        if (p[i] <= p[i - 1] && p[i] <= p[i + 1]) {
            if (!found || p[i] < p[best]) {
                best = i;
                found = true;
            }
        }
    }
    CutoffFrequency cut;
    cut.band_lo = band_lo;
    cut.band_hi = band_hi;
    if (!found) {
        if (!fallback_to_band_edge)
            throw std::runtime_error("detect_cutoff: no interior valley in the search band");
        cut.fallback_used = true;
        best = lo;
        for (std::size_t i = lo; i <= hi; ++i)
            if (p[i] < p[best]) best = i;
    }
    cut.f_d = f[best];
    cut.valley_power = p[best];
    return cut;
}

SignalWindow sharp_highpass(const SignalWindow& window, double cutoff_hz) {
    const std::size_t n = window.size();
    const double fs = window.fs;
    if (!(cutoff_hz > 0.0) || !(cutoff_hz < fs / 2.0))
        throw std::invalid_argument("sharp_highpass: cutoff must lie in (0, fs/2)");
    if (n == 0) throw std::invalid_argument("sharp_highpass: empty window");

    auto spec = fft::forward_real(window.values);
    for (std::size_t i = 0; i < n; ++i) {
        const double k = static_cast<double>(i <= n / 2 ? i : n - i);
        const double freq = k * fs / static_cast<double>(n);
        if (freq <= cutoff_hz) spec[i] = {0.0, 0.0};
    }
    auto time = fft::inverse(std::move(spec));

    SignalWindow out;
    out.start_index = window.start_index;
    out.fs = fs;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = time[i].real();
    return out;
}

}  // namespace wake::spectral
