#include "sar/rda.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "sar/error.hpp"
#include "sar/fft.hpp"
#include "sar/geometry.hpp"
#include "sar/interp.hpp"
#include "sar/parallel.hpp"

namespace sar {

namespace {

constexpr double kPi = std::numbers::pi;

void check_f_dc_frac(double f_dc_frac, double prf, const char* op) {
  if (std::abs(f_dc_frac) > prf / 2.0 * (1.0 + 1e-12)) {
    raise(ErrorKind::invariant, std::string(op) + ": |f_dc_frac| = " +
                                    std::to_string(std::abs(f_dc_frac)) +
                                    " exceeds PRF/2 = " + std::to_string(prf / 2.0));
  }
}

// Matched-filter spectrum: DFT of the replica w_r(t) exp(-j pi beta t^2)
// sampled on the raster's wrapped fast-time grid (t = 0 at bin 0, negative
// times at the top). The replica is even, so this equals the conjugate
// spectrum of the transmitted pulse.
std::vector<std::complex<double>> replica_spectrum(const RadarParams& params,
                                                   std::size_t n) {
  Raster replica(1, n);
  replica.Fr = params.Fr;
  const double half = params.T / 2.0;
  for (std::size_t j = 0; j < n; ++j) {
    double t = static_cast<double>(j) / params.Fr;
    if (j > n / 2) t -= static_cast<double>(n) / params.Fr;
    if (std::abs(t) <= half) {
      replica.at(0, j) = std::polar(1.0, -kPi * params.beta * t * t);
    }
  }
  fft_rows(replica, true);
  return std::move(replica.data);
}

double unwrap_to_nearest(double f_wrapped, double f_dc, double prf) {
  return f_wrapped + prf * std::round((f_dc - f_wrapped) / prf);
}

}  // namespace

Raster range_compress(const Raster& raw, const RadarParams& params) {
  require_domain(raw, Domain::time_time, "range_compress");
  params.validate();
  const std::vector<std::complex<double>> h = replica_spectrum(params, raw.cols);

  Raster out = raw;
  fft_rows(out, true);
  parallel_for(out.rows, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::complex<double>* row = out.row(i);
      for (std::size_t j = 0; j < out.cols; ++j) row[j] *= h[j];
    }
  });
  fft_rows(out, false);
  out.domain = Domain::time_time;
  return out;
}

Raster azimuth_fft(const Raster& rc, double f_dc_frac) {
  require_domain(rc, Domain::time_time, "azimuth_fft");
  check_f_dc_frac(f_dc_frac, rc.PRF, "azimuth_fft");
  Raster out = rc;
  fft_cols(out, true);
  const double step = out.PRF / static_cast<double>(out.rows);
  const long long k0 = centered_first_bin(out.rows, step, f_dc_frac);
  rows_from_dft_order(out, k0);
  out.time_origin = rc.t0;
  out.eta_origin = rc.eta0;
  out.eta0 = static_cast<double>(k0) * step;
  out.domain = Domain::time_doppler;
  return out;
}

Raster azimuth_ifft(Raster rd) {
  require_domain(rd, Domain::time_doppler, "azimuth_ifft");
  const double step = rd.doppler_step();
  const long long k0 = std::llround(rd.eta0 / step);
  rows_to_dft_order(rd, k0);
  fft_cols(rd, false);
  rd.eta0 = rd.eta_origin;
  rd.domain = Domain::time_time;
  return rd;
}

double rcm_shift(const RadarParams& params, double f_eta, double r0) {
  const double lambda = params.lambda();
  return lambda * lambda * r0 * f_eta * f_eta / (8.0 * params.v * params.v);
}

Raster rcmc_interp(const Raster& rd, const RadarParams& params, double f_dc,
                   int kernel_len) {
  require_domain(rd, Domain::time_doppler, "rcmc_interp");
  const SincInterp kernel(kernel_len);

  // Worst-case migration: largest |unwrapped f_eta| and farthest range column.
  double f_abs_max = 0;
  for (std::size_t i = 0; i < rd.rows; ++i) {
    f_abs_max = std::max(f_abs_max, std::abs(unwrap_to_nearest(rd.doppler(i), f_dc, rd.PRF)));
  }
  const double r0_max = rd.fast_time(rd.cols - 1) * params.c / 2.0;
  const double max_shift =
      rcm_shift(params, f_abs_max, r0_max) * 2.0 / params.c * params.Fr;
  if (max_shift > static_cast<double>(rd.cols)) {
    raise(ErrorKind::argument, "rcmc_interp: migration of " + std::to_string(max_shift) +
                                   " samples exceeds the raster extent");
  }

  Raster out = rd;
  parallel_for(rd.rows, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double f_eta = unwrap_to_nearest(rd.doppler(i), f_dc, rd.PRF);
      const std::span<const std::complex<double>> src(rd.row(i), rd.cols);
      std::complex<double>* dst = out.row(i);
      for (std::size_t j = 0; j < rd.cols; ++j) {
        const double r0 = rd.fast_time(j) * params.c / 2.0;
        const double shift = rcm_shift(params, f_eta, r0) * 2.0 / params.c * params.Fr;
        dst[j] = kernel.at(src, static_cast<double>(j) + shift, EdgePolicy::replicate);
      }
    }
  });
  return out;
}

Raster rcmc_freq2d(const Raster& rd, const RadarParams& params, double f_dc,
                   double r0_center) {
  require_domain(rd, Domain::time_doppler, "rcmc_freq2d");
  if (r0_center <= 0) {
    r0_center = (rd.fast_time(0) + rd.fast_time(rd.cols - 1)) / 2.0 * params.c / 2.0;
  }

  Raster out = rd;
  fft_rows(out, true);
  out.domain = Domain::freq_doppler;
  parallel_for(out.rows, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double f_eta = unwrap_to_nearest(rd.doppler(i), f_dc, rd.PRF);
      const double delay = rcm_shift(params, f_eta, r0_center) * 2.0 / params.c;
      std::complex<double>* row = out.row(i);
      for (std::size_t j = 0; j < out.cols; ++j) {
        const double f_t = dft_bin_freq(j, out.cols, params.Fr);
        row[j] *= std::polar(1.0, 2.0 * kPi * f_t * delay);
      }
    }
  });
  fft_rows(out, false);
  out.domain = Domain::time_doppler;
  return out;
}

Raster azimuth_compress(const Raster& rd, const RadarParams& params, double f_dc_frac) {
  require_domain(rd, Domain::time_doppler, "azimuth_compress");
  check_f_dc_frac(f_dc_frac, rd.PRF, "azimuth_compress");
  // The Doppler axis must carry the same centering the caller compresses for.
  const double axis_center = rd.eta0 + rd.doppler_step() * static_cast<double>(rd.rows) / 2.0;
  if (std::abs(axis_center - f_dc_frac) > rd.doppler_step() * 1.5) {
    raise(ErrorKind::invariant,
          "azimuth_compress: Doppler axis centered at " + std::to_string(axis_center) +
              " Hz but f_dc_frac is " + std::to_string(f_dc_frac) + " Hz");
  }

  std::vector<double> inv_k_a(rd.cols);
  for (std::size_t j = 0; j < rd.cols; ++j) {
    const double r0 = rd.fast_time(j) * params.c / 2.0;
    inv_k_a[j] = 1.0 / fm_rates(params, r0, 0.0).k_a;
  }

  Raster out = rd;
  parallel_for(out.rows, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double f_sq = out.doppler(i) * out.doppler(i);
      std::complex<double>* row = out.row(i);
      for (std::size_t j = 0; j < out.cols; ++j) {
        row[j] *= std::polar(1.0, -kPi * f_sq * inv_k_a[j] + kPi / 4.0);
      }
    }
  });
  return azimuth_ifft(std::move(out));
}

Raster focus_rda(const Raster& raw, const RadarParams& params, const RdaOptions& opts) {
  Raster rc = range_compress(raw, params);
  Raster rd = azimuth_fft(rc, opts.f_dc_frac);
  rc = Raster{};
  Raster corrected =
      opts.rcmc_mode == RcmcMode::range_doppler_interp
          ? rcmc_interp(rd, params, opts.f_dc, opts.interp_kernel_len)
          : rcmc_freq2d(rd, params, opts.f_dc, opts.rcmc_r0_center);
  rd = Raster{};
  return azimuth_compress(corrected, params, opts.f_dc_frac);
}

}  // namespace sar
