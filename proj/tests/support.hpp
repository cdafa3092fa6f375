// Shared desk-scale fixtures and independent oracles for the test suites.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "sar/fft.hpp"
#include "sar/geometry.hpp"
#include "sar/params.hpp"
#include "sar/simulate.hpp"
#include "sar/wk.hpp"

namespace testsup {

inline constexpr double kPi = std::numbers::pi;

// Desk-scale configuration: RADARSAT-1 fine-beam geometry with a shortened
// 5 us pulse and 2x-oversampled fast time so impulse responses are a couple
// of samples wide and a full scene focuses in well under a second.
inline sar::RadarParams desk_params() {
  return sar::make_radar_params(/*f_c=*/5.3e9, /*B=*/30.116e6, /*T=*/5e-6,
                                /*Fr=*/60.232e6, /*PRF=*/1256.98, /*v=*/7062.0,
                                /*R_ref=*/988650.0);
}

/// Table-I parameters as printed (41.75 us pulse, 32.317 MHz sampling).
inline sar::RadarParams table1_params(double c = sar::kDefaultC) {
  return sar::make_radar_params(5.3e9, 30.116e6, 41.75e-6, 32.317e6, 1256.98, 7062.0,
                                988650.0, c);
}

inline constexpr double kDeskAperture = 0.35;  // [s]

// Beam-center time that produces the requested Doppler centroid, from the
// exact geometry: u / sqrt(r0^2 + u^2) = -f_dc lambda / (2 v), u = v eta_c.
inline double eta_c_for_f_dc(const sar::RadarParams& p, double r0, double f_dc) {
  const double q = -f_dc * p.lambda() / (2.0 * p.v);
  const double u = r0 * q / std::sqrt(1.0 - q * q);
  return u / p.v;
}

// Single-target desk scene placed exactly on the grid: the target's 2 r0 / c
// sits `col` fast-time samples after t0 and eta = 0 sits `row` rows after
// eta0. Returns the scene and grid together.
struct DeskScene {
  sar::Scene scene;
  sar::GridSpec grid;
  std::size_t peak_row;  // row of eta = 0
  std::size_t peak_col;  // column of 2 r0 / c
};

inline DeskScene desk_point_scene(const sar::RadarParams& p, double aperture = kDeskAperture,
                                  std::size_t rows = 444, std::size_t cols = 420,
                                  std::size_t row = 222, std::size_t col = 160,
                                  double r_center = 988650.0,
                                  std::complex<double> sigma = {1.0, 0.0}) {
  DeskScene ds;
  ds.grid.rows = rows;
  ds.grid.cols = cols;
  ds.grid.eta0 = -static_cast<double>(row) / p.PRF;
  ds.grid.t0 = 2.0 * r_center / p.c - static_cast<double>(col) / p.Fr;
  // Re-derive r0 from the grid so 2 r0 / c lands exactly on the column.
  const double r0 = ds.grid.t0 * p.c / 2.0 + static_cast<double>(col) / p.Fr * p.c / 2.0;
  ds.scene.aperture_time = aperture;
  ds.scene.targets.push_back({sigma, r0, 0.0});
  ds.peak_row = row;
  ds.peak_col = col;
  return ds;
}

/// Number of grid samples inside the closed window |x - center| <= width/2.
inline std::size_t samples_in_window(double center, double width, double origin,
                                     double rate, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = origin + static_cast<double>(i) / rate;
    if (std::abs(x - center) <= width / 2.0) ++count;
  }
  return count;
}

// -3 dB width of a magnitude sequence in units of `upsample` samples,
// measured around its maximum with linear interpolation at the crossings.
inline double width_3db(const std::vector<double>& mag, double upsample) {
  const std::size_t peak =
      static_cast<std::size_t>(std::max_element(mag.begin(), mag.end()) - mag.begin());
  const double level = mag[peak] / std::sqrt(2.0);
  double left = 0, right = static_cast<double>(mag.size() - 1);
  for (std::size_t i = peak; i-- > 0;) {
    if (mag[i] < level) {
      left = static_cast<double>(i) + (level - mag[i]) / (mag[i + 1] - mag[i]);
      break;
    }
  }
  for (std::size_t i = peak + 1; i < mag.size(); ++i) {
    if (mag[i] < level) {
      right = static_cast<double>(i) - (level - mag[i]) / (mag[i - 1] - mag[i]);
      break;
    }
  }
  return (right - left) / upsample;
}

// Analytic 2-D spectrum of a point target at r0 as the discrete pipeline sees
// it: the stationary-phase terms of the echo model plus the DFT grid
// reference terms, with rectangular band supports.
inline sar::Raster analytic_spectrum(const sar::RadarParams& p, double r0, double t0_grid,
                                     double eta0_grid, std::size_t rows, std::size_t cols,
                                     double aperture) {
  sar::Raster spec(rows, cols);
  spec.Fr = p.Fr;
  spec.PRF = p.PRF;
  spec.domain = sar::Domain::freq_freq;
  spec.time_origin = t0_grid;
  spec.eta_origin = eta0_grid;
  const double col_step = p.Fr / static_cast<double>(cols);
  const double row_step = p.PRF / static_cast<double>(rows);
  spec.t0 = static_cast<double>(sar::centered_first_bin(cols, col_step, 0.0)) * col_step;
  spec.eta0 = static_cast<double>(sar::centered_first_bin(rows, row_step, 0.0)) * row_step;

  const double band_az = sar::fm_rates(p, r0, 0.0).k_a * aperture;
  for (std::size_t i = 0; i < rows; ++i) {
    const double f_eta = spec.doppler(i);
    if (std::abs(f_eta) > band_az / 2.0) continue;
    for (std::size_t j = 0; j < cols; ++j) {
      const double f_t = spec.fast_freq(j);
      if (std::abs(f_t) > p.B / 2.0) continue;
      const double map = sar::range_freq_map(p, f_t, f_eta);
      const double phase = -4.0 * kPi * r0 / p.c * map - kPi * f_t * f_t / p.beta +
                           2.0 * kPi * f_t * t0_grid + 2.0 * kPi * f_eta * eta0_grid;
      spec.at(i, j) = std::polar(1.0, phase);
    }
  }
  return spec;
}

// Brute-force sliding-median oracle: per pixel, gather the replicate-padded
// window, sort fully, take the lower middle order statistic.
inline std::vector<double> naive_median(const std::vector<double>& img, std::size_t rows,
                                        std::size_t cols, std::size_t m, std::size_t n) {
  const long long ar = static_cast<long long>((m - 1) / 2);
  const long long ac = static_cast<long long>((n - 1) / 2);
  std::vector<double> out(img.size());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<double> window;
      for (std::size_t wi = 0; wi < m; ++wi) {
        for (std::size_t wj = 0; wj < n; ++wj) {
          long long r = static_cast<long long>(i) - ar + static_cast<long long>(wi);
          long long c = static_cast<long long>(j) - ac + static_cast<long long>(wj);
          r = std::clamp<long long>(r, 0, static_cast<long long>(rows) - 1);
          c = std::clamp<long long>(c, 0, static_cast<long long>(cols) - 1);
          window.push_back(
              img[static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(c)]);
        }
      }
      std::sort(window.begin(), window.end());
      out[i * cols + j] = window[(window.size() - 1) / 2];
    }
  }
  return out;
}

// Coherent azimuth-compression gain of an ideal paraxial chirp pushed through
// the same unit-modulus phase flattening, computed with a hand-rolled DFT so
// it shares nothing with the library transform path.
inline double azimuth_gain_oracle(const sar::RadarParams& p, double r0, double aperture,
                                  std::size_t rows, double eta0) {
  const double k_a = sar::fm_rates(p, r0, 0.0).k_a;
  const auto n = static_cast<std::ptrdiff_t>(rows);
  std::vector<std::complex<double>> chirp(rows);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double eta = eta0 + static_cast<double>(i) / p.PRF;
    if (std::abs(eta) <= aperture / 2.0) {
      chirp[static_cast<std::size_t>(i)] = std::polar(1.0, -kPi * k_a * eta * eta);
    }
  }
  std::vector<std::complex<double>> spec(rows);
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    std::complex<double> acc{};
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      acc += chirp[static_cast<std::size_t>(i)] *
             std::polar(1.0, -2.0 * kPi * static_cast<double>(k * i) / static_cast<double>(n));
    }
    const double f = (k <= n / 2 ? static_cast<double>(k) : static_cast<double>(k - n)) *
                     p.PRF / static_cast<double>(rows);
    spec[static_cast<std::size_t>(k)] = acc * std::polar(1.0, -kPi * f * f / k_a + kPi / 4.0);
  }
  double best = 0;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    std::complex<double> acc{};
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      acc += spec[static_cast<std::size_t>(k)] *
             std::polar(1.0, 2.0 * kPi * static_cast<double>(k * i) / static_cast<double>(n));
    }
    best = std::max(best, std::abs(acc) / static_cast<double>(rows));
  }
  return best;
}

}  // namespace testsup
