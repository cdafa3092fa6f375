#pragma once

#include <cstddef>
#include <string>

#include "sar/params.hpp"
#include "sar/raster.hpp"

namespace sar {

struct DopplerEstimate {
  double f_dc_frac = 0;  // fractional centroid in [-PRF/2, PRF/2] [Hz]
  long long M = 0;       // ambiguity integer
  double f_dc = 0;       // unambiguous centroid M*PRF + f_dc_frac [Hz]
  double prf = 0;
  std::string method;
  std::string warning;  // empty when the coarse estimate was consistent
};

struct TrajectorySlope {
  double slope = 0;         // range samples per azimuth sample
  double fit_residual = 0;  // RMS of the line fit [samples]
  std::size_t row_begin = 0;
  std::size_t row_end = 0;  // half-open support actually used
};

struct ColumnSpan {
  std::size_t begin = 0;
  std::size_t count = 0;  // 0 means all remaining columns
};

struct RasterWindow {
  std::size_t row_begin = 0, row_end = 0;  // half-open
  std::size_t col_begin = 0, col_end = 0;
};

// Fractional centroid from the averaged azimuth power spectrum of the given
// range cells: fit p(f) = a0 + a1 cos(2 pi (f - f_pk)/PRF) by least squares
// and return f_pk. The default block averages 230 range cells (the most
// energetic contiguous stretch; the whole raster when narrower than that).
// A fit amplitude below 5% of the spectrum mean means there is no usable
// centroid and raises Error(estimate).
double estimate_frac_spectrum(const Raster& rc, ColumnSpan block = {});

// Fractional centroid as the angle of the average cross correlation between
// azimuth-adjacent samples: (PRF / 2 pi) * arg(sum s*(eta) s(eta + 1/PRF)).
double estimate_frac_accc(const Raster& rc, ColumnSpan block = {});

// Least-squares slope of the fast-time peak trajectory of one dominant target
// inside the window. Peaks are refined by 3-point parabolic interpolation of
// the magnitude. Rows whose second-best peak (outside the main lobe) rivals
// the best are counted as ambiguous; more than 25% such rows is an error.
TrajectorySlope trajectory_slope(const Raster& rc, const RasterWindow& window);

// Coarse centroid from a trajectory slope: dR/deta = slope * (c / 2 Fr) * PRF,
// then -(2/lambda) dR/deta. A trajectory drifting to larger columns recedes,
// giving a negative centroid.
double coarse_dc_from_slope(const TrajectorySlope& slope, const RadarParams& params);

// Ambiguity resolution: M = round((f_dc_coarse - f_dc_frac)/PRF) and
// f_dc = M*PRF + f_dc_frac. A coarse estimate farther than PRF/2 from the
// resolved value is flagged in the warning field.
DopplerEstimate resolve_ambiguity(double f_dc_coarse, double f_dc_frac, double prf);

struct RdaOptions;
struct WkOptions;

// Option builders: fill the centroid fields of focusing options from an
// estimate, leaving everything else untouched.
void apply_estimate(const DopplerEstimate& est, RdaOptions& opts);
void apply_estimate(const DopplerEstimate& est, WkOptions& opts);

}  // namespace sar
