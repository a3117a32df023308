#pragma once

#include <complex>
#include <vector>

namespace wake::fft {

using cvec = std::vector<std::complex<double>>;

// In-place-style DFT of arbitrary length. Radix-2 for powers of two,
// Bluestein's chirp-z otherwise. Stateless and safe to call from
// concurrent threads.
cvec forward(cvec x);

// Inverse DFT with 1/N normalization.
cvec inverse(cvec x);

// Real input convenience wrapper.
cvec forward_real(const std::vector<double>& x);

}  // namespace wake::fft
