#include "wake/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wake::fft {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Iterative radix-2 Cooley-Tukey. sign = -1 forward, +1 inverse (unnormalized).
void fft_pow2(cvec& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// Bluestein chirp-z transform for arbitrary n, expressed through a
// power-of-two convolution. Chirp phases use k^2 mod 2n to keep the
// argument of sin/cos small.
cvec bluestein(const cvec& x, int sign) {
    const std::size_t n = x.size();
    const std::size_t m = next_pow2(2 * n - 1);
    cvec chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t k2 = (k * k) % (2 * n);
        const double ang = sign * std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
        chirp[k] = {std::cos(ang), std::sin(ang)};
    }
    cvec a(m, {0.0, 0.0});
    cvec b(m, {0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
    b[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);
    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
    fft_pow2(a, +1);
    cvec out(n);
    const double norm = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * norm * chirp[k];
    return out;
}

cvec transform(cvec x, int sign) {
    if (x.empty()) throw std::invalid_argument("fft: empty input");
    if (x.size() == 1) return x;
    if (is_pow2(x.size())) {
        fft_pow2(x, sign);
        return x;
    }
    return bluestein(x, sign);
}

}  // namespace

cvec forward(cvec x) { return transform(std::move(x), -1); }

cvec inverse(cvec x) {
    const double norm = 1.0 / static_cast<double>(x.size());
    cvec out = transform(std::move(x), +1);
    for (auto& v : out) v *= norm;
    return out;
}

cvec forward_real(const std::vector<double>& x) {
    cvec c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c[i] = {x[i], 0.0};
    return forward(std::move(c));
}

}  // namespace wake::fft
