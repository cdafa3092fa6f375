#pragma once

#include "sar/params.hpp"
#include "sar/raster.hpp"

namespace sar {

enum class RcmcMode {
  range_doppler_interp,  // per-row sinc interpolation in the range-Doppler domain
  freq2d_phase,          // linear phase multiply in the 2-D frequency domain
};

struct RdaOptions {
  RcmcMode rcmc_mode = RcmcMode::range_doppler_interp;
  int interp_kernel_len = 8;  // {4, 8, 16}
  double f_dc = 0;            // unambiguous Doppler centroid [Hz]
  double f_dc_frac = 0;       // fractional centroid, |f_dc_frac| <= PRF/2 [Hz]
  double rcmc_r0_center = 0;  // freq2d mode reference range; 0 selects mid-swath
};

// Fast-time matched filtering against the transmitted chirp replica
// w_r(t) exp(-j pi beta t^2), performed as a forward/inverse DFT per row with
// a spectrum multiply. The leading/trailing ceil(T*Fr/2) columns contain
// circular wrap from the convolution and are kept rather than trimmed, so the
// raster geometry is unchanged.
Raster range_compress(const Raster& raw, const RadarParams& params);

// Column-wise DFT over slow time. The Doppler axis is labeled on the wrapped
// interval centered at f_dc_frac and rows are rotated so the azimuth spectrum
// is contiguous in storage.
Raster azimuth_fft(const Raster& rc, double f_dc_frac);

/// Exact inverse of azimuth_fft. Takes its argument by value; pass an rvalue
/// to transform in place.
Raster azimuth_ifft(Raster rd);

/// Range migration lambda^2 r0 f_eta^2 / (8 v^2) of Doppler frequency f_eta.
double rcm_shift(const RadarParams& params, double f_eta, double r0);

// Range cell migration correction by windowed-sinc resampling of each Doppler
// row. Doppler frequencies are unwrapped to the ambiguity band nearest f_dc;
// the shift is evaluated with each output column's own range.
Raster rcmc_interp(const Raster& rd, const RadarParams& params, double f_dc,
                   int kernel_len = 8);

// Range cell migration correction as a phase multiply in the 2-D frequency
// domain, exact for targets at r0_center; the residual for other ranges grows
// with |r0 - r0_center| and is not corrected.
Raster rcmc_freq2d(const Raster& rd, const RadarParams& params, double f_dc,
                   double r0_center);

// Azimuth matched filter exp(-j pi f_eta^2 / k_a + j pi/4) per column (k_a of
// that column's range), then inverse slow-time DFT. The filter is the
// stationary-phase spectrum of the azimuth replica: unit modulus, so column
// energy is preserved; the pi/4 Fresnel constant keeps the compressed peak
// phase at -4 pi f_c r0 / c.
Raster azimuth_compress(const Raster& rd, const RadarParams& params, double f_dc_frac);

/// range_compress -> azimuth_fft -> RCMC (per options) -> azimuth_compress.
Raster focus_rda(const Raster& raw, const RadarParams& params, const RdaOptions& opts);

}  // namespace sar
