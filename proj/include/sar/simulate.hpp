#pragma once

#include <cstdint>
#include <optional>

#include "sar/params.hpp"
#include "sar/raster.hpp"

namespace sar {

struct GridSpec {
  std::size_t rows = 0;
  std::size_t cols = 0;
  double t0 = 0;    // fast time of column 0 [s]
  double eta0 = 0;  // slow time of row 0 [s]
};

struct SimOptions {
  // Keep the residual quadratic phase beta*pi*(2R/c)^2 of the received chirp.
  // Turning it off reproduces the down-converted model that drops the term;
  // the dropped term shows up as a constant phase on the compressed response.
  bool include_rvp = true;
  std::optional<double> noise_snr_db{};  // per-sample complex-Gaussian SNR
  std::uint64_t noise_seed = 0;
  bool allow_undersampled = false;  // permit Fr < B
};

// Baseband raw echo raster: superposition over targets of
//   sigma * w_r(t - 2R/c) * w_a(eta - eta_c) * exp(j phi),
//   phi = -4 pi f_c R/c + pi beta (t - 2R/c)^2   [minus pi beta (2R/c)^2 when
//   include_rvp is off]. Windows are 1 on the closed interval +-width/2.
// Rows are generated independently; output is deterministic.
Raster simulate_raw(const Scene& scene, const RadarParams& params, const GridSpec& grid,
                    const SimOptions& opts = {});

// Adds circular complex Gaussian noise at snr_db relative to the mean sample
// power. Deterministic for a fixed seed (own Box-Muller, not the
// implementation-defined std::normal_distribution).
Raster add_noise(const Raster& raster, double snr_db, std::uint64_t seed);

// Grid that covers every target's echo support plus guard margins (defaults:
// 0.55 T of fast time on each side for matched-filter wrap, 4 rows of slow
// time). Dimensions are rounded up to multiples of four.
GridSpec auto_grid(const Scene& scene, const RadarParams& params,
                   double fast_guard = -1.0, double slow_guard = -1.0);

}  // namespace sar
