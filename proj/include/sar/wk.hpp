#pragma once

#include "sar/params.hpp"
#include "sar/raster.hpp"

namespace sar {

struct WkOptions {
  double r_ref = 0;           // reference slant range; 0 selects params.R_ref
  int stolt_kernel_len = 8;   // {4, 8, 16}
  double f_dc = 0;            // unambiguous centroid for Doppler unwrapping [Hz]
  double f_dc_frac = 0;       // wrapped centroid [Hz]
  std::size_t output_cols = 0;  // Stolt output grid length; 0 keeps the input grid
};

struct RefMultiplyStats {
  std::size_t zeroed = 0;  // cells violating the evanescent condition
  std::size_t total = 0;
};

// 2-D DFT of the raw raster. The Doppler axis is centered at f_dc_frac as in
// azimuth_fft; the fast-frequency axis is baseband [-Fr/2, Fr/2).
Raster spectrum_2d(const Raster& raw, double f_dc_frac);

/// Inverse 2-D transform back to time/time using the stored grid origins.
/// Takes its argument by value; pass an rvalue to transform in place.
Raster inverse_spectrum_2d(Raster spec);

/// sqrt((f_c + f_t)^2 - c^2 f_eta^2 / (4 v^2)), the range-frequency map shared
/// by the reference multiply and the Stolt resampler. Returns 0 for evanescent
/// cells (negative radicand).
double range_freq_map(const RadarParams& params, double f_t, double f_eta);

// Unit-modulus multiply by the conjugate spectrum of an ideal target at r_ref:
//   exp(+j [4 pi (r_ref/c) range_freq_map - 2 pi f_t (2 r_ref/c - t_origin)]).
// The second term references the phase to the raster's own fast-time grid so
// the residual of a target at r0 is exactly -4 pi ((r0-r_ref)/c) * map, whose
// slope stays within the grid. Doppler rows are read as unwrapped f_eta.
// Evanescent cells are zeroed and counted; more than 1% zeroed is an error.
Raster reference_multiply(const Raster& spec, const RadarParams& params, double r_ref,
                          RefMultiplyStats* stats = nullptr);

/// Removes the fast-frequency chirp phase by multiplying with exp(+j pi f_t^2 / beta).
Raster remove_range_chirp(const Raster& spec, const RadarParams& params);

/// Source fast frequency feeding output bin f_t_new at Doppler f_eta:
/// sqrt((f_c + f_t_new)^2 + c^2 f_eta^2 / (4 v^2)) - f_c. Strictly increasing
/// in f_t_new.
double stolt_source_freq(const RadarParams& params, double f_t_new, double f_eta);

// Per-Doppler-row windowed-sinc resampling of the fast-frequency axis onto a
// uniform output grid, linearizing the focusing phase. Out-of-support cells
// are zeroed. The output grid defaults to the input grid; a wider grid is
// rejected.
Raster stolt_resample(const Raster& spec, const RadarParams& params, const WkOptions& opts);

// spectrum_2d -> remove_range_chirp -> reference_multiply -> stolt_resample ->
// inverse 2-D DFT. The output fast-time origin is 2 r_ref / c, so a target at
// r0 peaks at the column offset 2 (r0 - r_ref) / c * Fr (mod cols) from the
// grid origin; rows keep the input slow-time grid.
Raster focus_wk(const Raster& raw, const RadarParams& params, const WkOptions& opts);

}  // namespace sar
