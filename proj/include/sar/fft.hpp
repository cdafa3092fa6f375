#pragma once

#include "sar/raster.hpp"

namespace sar {

// Forward transforms are unnormalized; inverse transforms scale by 1/n so a
// forward/inverse pair composes to the identity.
void fft_rows(Raster& r, bool forward);
void fft_cols(Raster& r, bool forward);

/// Frequency of DFT bin k (n-point transform at sample rate `rate`), mapped to
/// the baseband alias in [-rate/2, rate/2).
double dft_bin_freq(std::size_t k, std::size_t n, double rate);

/// First bin of an n-point axis re-centered on `center`: smallest integer k
/// with k*step >= center - n*step/2.
long long centered_first_bin(std::size_t n, double step, double center);

// Reorder DFT-ordered rows/cols so slot i holds bin (k0 + i) mod n, and back.
void rows_from_dft_order(Raster& r, long long k0);
void rows_to_dft_order(Raster& r, long long k0);
void cols_from_dft_order(Raster& r, long long k0);
void cols_to_dft_order(Raster& r, long long k0);

}  // namespace sar
