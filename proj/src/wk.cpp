#include "sar/wk.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <string>

#include "sar/error.hpp"
#include "sar/fft.hpp"
#include "sar/interp.hpp"
#include "sar/parallel.hpp"
#include "sar/rda.hpp"

namespace sar {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Raster spectrum_2d(const Raster& raw, double f_dc_frac) {
  require_domain(raw, Domain::time_time, "spectrum_2d");
  Raster out = azimuth_fft(raw, f_dc_frac);
  fft_rows(out, true);
  const double step = out.Fr / static_cast<double>(out.cols);
  const long long k0 = centered_first_bin(out.cols, step, 0.0);
  cols_from_dft_order(out, k0);
  out.time_origin = raw.t0;
  out.t0 = static_cast<double>(k0) * step;
  out.domain = Domain::freq_freq;
  return out;
}

Raster inverse_spectrum_2d(Raster spec) {
  if (spec.domain != Domain::freq_freq && spec.domain != Domain::stolt) {
    raise(ErrorKind::domain, std::string("inverse_spectrum_2d: expected freq/freq or "
                                         "stolt raster, got ") +
                                 domain_name(spec.domain));
  }
  const double col_step = spec.fast_freq_step();
  const long long kc = std::llround(spec.t0 / col_step);
  cols_to_dft_order(spec, kc);
  fft_rows(spec, false);
  spec.t0 = spec.time_origin;
  spec.domain = Domain::time_doppler;
  return azimuth_ifft(std::move(spec));
}

double range_freq_map(const RadarParams& params, double f_t, double f_eta) {
  const double a = params.f_c + f_t;
  const double b = params.c * f_eta / (2.0 * params.v);
  const double radicand = a * a - b * b;
  if (radicand <= 0) return 0.0;
  return std::sqrt(radicand);
}

Raster remove_range_chirp(const Raster& spec, const RadarParams& params) {
  require_domain(spec, Domain::freq_freq, "remove_range_chirp");
  Raster out = spec;
  parallel_for(out.rows, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::complex<double>* row = out.row(i);
      for (std::size_t j = 0; j < out.cols; ++j) {
        const double f_t = out.fast_freq(j);
        row[j] *= std::polar(1.0, kPi * f_t * f_t / params.beta);
      }
    }
  });
  return out;
}

Raster reference_multiply(const Raster& spec, const RadarParams& params, double r_ref,
                          RefMultiplyStats* stats) {
  require_domain(spec, Domain::freq_freq, "reference_multiply");
  if (!(r_ref > 0)) {
    raise(ErrorKind::argument, "reference_multiply: r_ref must be positive");
  }
  // The multiplier is the conjugate discrete spectrum of an ideal target at
  // r_ref: the continuous phase 4 pi (r_ref/c) map plus the term canceling the
  // raster's own fast-time grid reference. Without the grid term the residual
  // linear phase aliases across DFT bins and the Stolt stage cannot
  // interpolate it.
  const double grid_delay = spec.time_origin;

  Raster out = spec;
  std::atomic<std::size_t> zeroed{0};
  parallel_for(out.rows, [&](std::size_t begin, std::size_t end) {
    std::size_t local_zeroed = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const double f_eta = out.doppler(i);
      std::complex<double>* row = out.row(i);
      for (std::size_t j = 0; j < out.cols; ++j) {
        const double f_t = out.fast_freq(j);
        const double map = range_freq_map(params, f_t, f_eta);
        if (map == 0.0) {
          row[j] = 0;
          ++local_zeroed;
          continue;
        }
        const double phase = 4.0 * kPi * r_ref / params.c * map - 2.0 * kPi * f_t * grid_delay;
        row[j] *= std::polar(1.0, phase);
      }
    }
    zeroed += local_zeroed;
  });

  const std::size_t total = out.rows * out.cols;
  if (stats) {
    stats->zeroed = zeroed.load();
    stats->total = total;
  }
  if (total > 0 && static_cast<double>(zeroed.load()) > 0.01 * static_cast<double>(total)) {
    raise(ErrorKind::invariant,
          "reference_multiply: " + std::to_string(zeroed.load()) + " of " +
              std::to_string(total) + " cells are evanescent (> 1%)");
  }
  return out;
}

double stolt_source_freq(const RadarParams& params, double f_t_new, double f_eta) {
  const double a = params.f_c + f_t_new;
  const double b = params.c * f_eta / (2.0 * params.v);
  return std::sqrt(a * a + b * b) - params.f_c;
}

Raster stolt_resample(const Raster& spec, const RadarParams& params, const WkOptions& opts) {
  require_domain(spec, Domain::freq_freq, "stolt_resample");
  const std::size_t out_cols = opts.output_cols == 0 ? spec.cols : opts.output_cols;
  if (out_cols > spec.cols) {
    raise(ErrorKind::argument,
          "stolt_resample: output grid of " + std::to_string(out_cols) +
              " bins is wider than the " + std::to_string(spec.cols) + "-bin support");
  }
  const SincInterp kernel(opts.stolt_kernel_len);
  const double step = spec.fast_freq_step();

  Raster out(spec.rows, out_cols);
  out.Fr = step * static_cast<double>(out_cols);  // same bin spacing, shorter axis
  out.PRF = spec.PRF;
  out.eta0 = spec.eta0;
  out.time_origin = spec.time_origin;
  out.eta_origin = spec.eta_origin;
  const long long k0_out = centered_first_bin(out_cols, step, 0.0);
  out.t0 = static_cast<double>(k0_out) * step;
  out.domain = Domain::stolt;

  parallel_for(spec.rows, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double f_eta = spec.doppler(i);
      const std::span<const std::complex<double>> src(spec.row(i), spec.cols);
      std::complex<double>* dst = out.row(i);
      for (std::size_t j = 0; j < out_cols; ++j) {
        const double f_t_new = out.fast_freq(j);
        const double f_t_src = stolt_source_freq(params, f_t_new, f_eta);
        const double pos = (f_t_src - spec.t0) / step;
        dst[j] = kernel.at(src, pos, EdgePolicy::zero);
      }
    }
  });
  return out;
}

Raster focus_wk(const Raster& raw, const RadarParams& params, const WkOptions& opts) {
  params.validate();
  const double r_ref = opts.r_ref > 0 ? opts.r_ref : params.R_ref;

  Raster spec = spectrum_2d(raw, opts.f_dc_frac);
  // Unwrap the Doppler axis to the ambiguity band of f_dc; the bin order is
  // unchanged because the offset is an exact multiple of PRF (= rows * step).
  const double center = spec.eta0 + spec.PRF / 2.0;
  spec.eta0 += spec.PRF * std::round((opts.f_dc - center) / spec.PRF);

  spec = remove_range_chirp(spec, params);
  spec = reference_multiply(spec, params, r_ref, nullptr);
  spec = stolt_resample(spec, params, opts);

  // The reference multiply anchored fast time to r_ref: column 0 of the image
  // is the reference range.
  spec.time_origin = 2.0 * r_ref / params.c;
  return inverse_spectrum_2d(std::move(spec));
}

}  // namespace sar
