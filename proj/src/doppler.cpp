#include "sar/doppler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "sar/error.hpp"
#include "sar/fft.hpp"
#include "sar/geometry.hpp"
#include "sar/rda.hpp"
#include "sar/wk.hpp"

namespace sar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kSpectrumBlockCells = 230;

ColumnSpan resolve_span(const Raster& r, ColumnSpan block, const char* op) {
  ColumnSpan s = block;
  if (s.count == 0) s.count = r.cols - std::min(r.cols, s.begin);
  if (s.begin >= r.cols || s.begin + s.count > r.cols || s.count == 0) {
    raise(ErrorKind::argument, std::string(op) + ": column span [" +
                                   std::to_string(s.begin) + ", " +
                                   std::to_string(s.begin + s.count) +
                                   ") outside raster with " + std::to_string(r.cols) +
                                   " columns");
  }
  return s;
}

}  // namespace

double estimate_frac_spectrum(const Raster& rc, ColumnSpan block) {
  require_domain(rc, Domain::time_time, "estimate_frac_spectrum");
  if (rc.rows < 2) {
    raise(ErrorKind::argument, "estimate_frac_spectrum: need at least 2 azimuth samples");
  }
  // Default averaging block: 230 range cells (fewer when the raster is
  // narrower), placed on the most energetic contiguous stretch so guard
  // columns do not dilute the average.
  if (block.count == 0 && block.begin == 0 && rc.cols > kSpectrumBlockCells) {
    std::vector<double> col_energy(rc.cols, 0.0);
    for (std::size_t i = 0; i < rc.rows; ++i) {
      const std::complex<double>* row = rc.row(i);
      for (std::size_t j = 0; j < rc.cols; ++j) col_energy[j] += std::norm(row[j]);
    }
    double window = 0;
    for (std::size_t j = 0; j < kSpectrumBlockCells; ++j) window += col_energy[j];
    double best = window;
    std::size_t best_begin = 0;
    for (std::size_t j = kSpectrumBlockCells; j < rc.cols; ++j) {
      window += col_energy[j] - col_energy[j - kSpectrumBlockCells];
      if (window > best) {
        best = window;
        best_begin = j - kSpectrumBlockCells + 1;
      }
    }
    block = {best_begin, kSpectrumBlockCells};
  }
  const ColumnSpan span = resolve_span(rc, block, "estimate_frac_spectrum");

  // Average azimuth power spectrum over the selected range cells.
  const std::size_t n = rc.rows;
  std::vector<double> power(n, 0.0);
  {
    Raster block_raster(n, span.count);
    block_raster.Fr = rc.Fr;
    block_raster.PRF = rc.PRF;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < span.count; ++j) {
        block_raster.at(i, j) = rc.at(i, span.begin + j);
      }
    }
    fft_cols(block_raster, true);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < span.count; ++j) {
        power[i] += std::norm(block_raster.at(i, j));
      }
    }
  }

  // Least-squares fit of a0 + a cos(2 pi k / n) + b sin(2 pi k / n); the
  // sinusoid has period PRF, so its phase is the spectrum peak location.
  // The basis is orthogonal on the full circle, making the fit a projection.
  double a0 = 0, a = 0, b = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    a0 += power[k];
    a += power[k] * std::cos(theta);
    b += power[k] * std::sin(theta);
  }
  a0 /= static_cast<double>(n);
  a *= 2.0 / static_cast<double>(n);
  b *= 2.0 / static_cast<double>(n);

  const double amplitude = std::hypot(a, b);
  if (!(a0 > 0) || amplitude < 0.05 * a0) {
    raise(ErrorKind::estimate,
          "estimate_frac_spectrum: spectrum too flat for a centroid (fit amplitude " +
              std::to_string(amplitude) + " vs mean " + std::to_string(a0) + ")");
  }
  const double f_pk = rc.PRF * std::atan2(b, a) / (2.0 * kPi);
  return f_pk;
}

double estimate_frac_accc(const Raster& rc, ColumnSpan block) {
  require_domain(rc, Domain::time_time, "estimate_frac_accc");
  const ColumnSpan span = resolve_span(rc, block, "estimate_frac_accc");
  if (rc.rows < 2) {
    raise(ErrorKind::argument, "estimate_frac_accc: need at least 2 azimuth samples");
  }

  std::complex<double> acc{};
  for (std::size_t i = 0; i + 1 < rc.rows; ++i) {
    const std::complex<double>* row = rc.row(i);
    const std::complex<double>* next = rc.row(i + 1);
    for (std::size_t j = span.begin; j < span.begin + span.count; ++j) {
      acc += std::conj(row[j]) * next[j];
    }
  }
  if (std::abs(acc) == 0.0) {
    raise(ErrorKind::estimate, "estimate_frac_accc: zero cross-correlation accumulation");
  }
  return rc.PRF * std::arg(acc) / (2.0 * kPi);
}

TrajectorySlope trajectory_slope(const Raster& rc, const RasterWindow& window) {
  require_domain(rc, Domain::time_time, "trajectory_slope");
  if (window.row_end <= window.row_begin || window.col_end <= window.col_begin ||
      window.row_end > rc.rows || window.col_end > rc.cols) {
    raise(ErrorKind::argument, "trajectory_slope: empty or out-of-range window");
  }
  const std::size_t n_cols = window.col_end - window.col_begin;
  if (n_cols < 3) {
    raise(ErrorKind::argument, "trajectory_slope: window narrower than 3 columns");
  }

  std::vector<double> xs, ys;
  std::size_t ambiguous = 0, used = 0;
  for (std::size_t i = window.row_begin; i < window.row_end; ++i) {
    const std::complex<double>* row = rc.row(i);
    std::size_t best = window.col_begin;
    double best_mag = 0;
    for (std::size_t j = window.col_begin; j < window.col_end; ++j) {
      const double m = std::abs(row[j]);
      if (m > best_mag) {
        best_mag = m;
        best = j;
      }
    }
    if (best_mag <= 0) continue;
    ++used;

    // A rivaling peak well away from the main one marks a multi-modal row.
    double second = 0;
    for (std::size_t j = window.col_begin; j < window.col_end; ++j) {
      if (j + 4 > best && best + 4 > j) continue;  // |j - best| <= 3
      second = std::max(second, std::abs(row[j]));
    }
    if (second > 0.7 * best_mag) ++ambiguous;

    // 3-point parabolic refinement on magnitude.
    double delta = 0;
    if (best > window.col_begin && best + 1 < window.col_end) {
      const double yl = std::abs(row[best - 1]);
      const double yc = best_mag;
      const double yr = std::abs(row[best + 1]);
      const double denom = yl - 2.0 * yc + yr;
      if (denom < 0) delta = std::clamp(0.5 * (yl - yr) / denom, -0.5, 0.5);
    }
    xs.push_back(static_cast<double>(i));
    ys.push_back(static_cast<double>(best) + delta);
  }

  if (used < 2) {
    raise(ErrorKind::estimate, "trajectory_slope: fewer than 2 usable rows");
  }
  if (4 * ambiguous > used) {
    raise(ErrorKind::estimate,
          "trajectory_slope: trajectory is ambiguous in " + std::to_string(ambiguous) +
              " of " + std::to_string(used) + " rows");
  }

  // Least-squares line col = alpha + slope * row.
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * ys[k];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) {
    raise(ErrorKind::estimate, "trajectory_slope: degenerate row support");
  }
  TrajectorySlope result;
  result.slope = (n * sxy - sx * sy) / denom;
  const double alpha = (sy - result.slope * sx) / n;
  double ss = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double e = ys[k] - (alpha + result.slope * xs[k]);
    ss += e * e;
  }
  result.fit_residual = std::sqrt(ss / n);
  result.row_begin = window.row_begin;
  result.row_end = window.row_end;
  return result;
}

double coarse_dc_from_slope(const TrajectorySlope& slope, const RadarParams& params) {
  const double range_rate = slope.slope * params.c / (2.0 * params.Fr) * params.PRF;
  return dc_from_range_rate(params, range_rate);
}

DopplerEstimate resolve_ambiguity(double f_dc_coarse, double f_dc_frac, double prf) {
  if (!(prf > 0) || !std::isfinite(f_dc_coarse) || !std::isfinite(f_dc_frac)) {
    raise(ErrorKind::argument, "resolve_ambiguity: non-finite inputs");
  }
  if (std::abs(f_dc_frac) > prf / 2.0 * (1.0 + 1e-12)) {
    raise(ErrorKind::invariant, "resolve_ambiguity: |f_dc_frac| exceeds PRF/2");
  }
  DopplerEstimate est;
  est.prf = prf;
  est.f_dc_frac = f_dc_frac;
  est.M = std::llround((f_dc_coarse - f_dc_frac) / prf);
  est.f_dc = static_cast<double>(est.M) * prf + f_dc_frac;
  est.method = "resolve";
  if (std::abs(f_dc_coarse - est.f_dc) > prf / 2.0) {
    est.warning = "coarse estimate " + std::to_string(f_dc_coarse) +
                  " Hz is more than PRF/2 from the resolved " +
                  std::to_string(est.f_dc) + " Hz";
  }
  return est;
}

void apply_estimate(const DopplerEstimate& est, RdaOptions& opts) {
  opts.f_dc = est.f_dc;
  opts.f_dc_frac = est.f_dc_frac;
}

void apply_estimate(const DopplerEstimate& est, WkOptions& opts) {
  opts.f_dc = est.f_dc;
  opts.f_dc_frac = est.f_dc_frac;
}

}  // namespace sar
