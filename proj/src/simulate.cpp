#include "sar/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "sar/error.hpp"
#include "sar/geometry.hpp"
#include "sar/parallel.hpp"

namespace sar {

namespace {

constexpr double kPi = std::numbers::pi;

// Closed windows: a sample exactly on the edge is inside. The tolerance only
// absorbs last-ulp rounding of the sample positions.
bool in_window(double x, double half_width) {
  return std::abs(x) <= half_width * (1.0 + 4.0 * 1e-16) + 1e-300;
}

}  // namespace

Raster simulate_raw(const Scene& scene, const RadarParams& params, const GridSpec& grid,
                    const SimOptions& opts) {
  if (params.Fr < params.B) {
    if (!opts.allow_undersampled) {
      raise(ErrorKind::invariant,
            "simulate_raw: Fr < B aliases the fast-time chirp (set allow_undersampled "
            "to override)");
    }
    RadarParams relaxed = params;
    relaxed.Fr = params.B;  // check everything except the sampling adequacy
    relaxed.validate();
  } else {
    params.validate();
  }
  if (grid.rows == 0 || grid.cols == 0) {
    raise(ErrorKind::argument, "simulate_raw: empty grid");
  }

  Raster out(grid.rows, grid.cols);
  out.t0 = grid.t0;
  out.Fr = params.Fr;
  out.eta0 = grid.eta0;
  out.PRF = params.PRF;
  out.time_origin = grid.t0;
  out.eta_origin = grid.eta0;
  out.domain = Domain::time_time;

  const double half_pulse = params.T / 2.0;
  const double half_aperture = scene.aperture_time / 2.0;

  parallel_for(grid.rows, [&](std::size_t row_begin, std::size_t row_end) {
    for (std::size_t i = row_begin; i < row_end; ++i) {
      const double eta = out.slow_time(i);
      std::complex<double>* row = out.row(i);
      for (const PointTarget& target : scene.targets) {
        if (!in_window(eta - target.eta_c, half_aperture)) continue;
        const double range = slant_range(target, params.v, eta);
        const double tau = 2.0 * range / params.c;
        // Base phase: carrier delay, plus the residual video phase unless the
        // caller asked for the dropped-term form.
        double phi0 = -4.0 * kPi * params.f_c * range / params.c;
        if (!opts.include_rvp) phi0 -= kPi * params.beta * tau * tau;

        const double lo = (tau - half_pulse - grid.t0) * params.Fr;
        const double hi = (tau + half_pulse - grid.t0) * params.Fr;
        const long long j_lo = std::max<long long>(0, static_cast<long long>(std::floor(lo)));
        const long long j_hi = std::min<long long>(static_cast<long long>(grid.cols) - 1,
                                                   static_cast<long long>(std::ceil(hi)));
        for (long long j = j_lo; j <= j_hi; ++j) {
          const double u = out.fast_time(static_cast<std::size_t>(j)) - tau;
          if (!in_window(u, half_pulse)) continue;
          const double phase = phi0 + kPi * params.beta * u * u;
          row[j] += target.sigma * std::polar(1.0, phase);
        }
      }
    }
  });

  if (opts.noise_snr_db) {
    out = add_noise(out, *opts.noise_snr_db, opts.noise_seed);
  }
  return out;
}

namespace {

// Deterministic standard normal pairs from a fixed-seed mt19937_64;
// Box-Muller keeps the stream identical across standard libraries.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : gen_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return mag * std::cos(2.0 * kPi * u2);
  }

 private:
  double uniform() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1p-53;
  }

  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0;
};

}  // namespace

Raster add_noise(const Raster& raster, double snr_db, std::uint64_t seed) {
  require_domain(raster, Domain::time_time, "add_noise");
  Raster out = raster;
  if (std::isinf(snr_db) && snr_db > 0) return out;

  const double mean_power = raster.data.empty()
                                ? 0.0
                                : raster.energy() / static_cast<double>(raster.data.size());
  const double noise_power = mean_power * std::pow(10.0, -snr_db / 10.0);
  const double sigma = std::sqrt(noise_power / 2.0);

  GaussianStream gauss(seed);
  for (auto& x : out.data) {
    x += std::complex<double>(sigma * gauss.next(), sigma * gauss.next());
  }
  return out;
}

GridSpec auto_grid(const Scene& scene, const RadarParams& params, double fast_guard,
                   double slow_guard) {
  scene.validate();
  if (fast_guard < 0) fast_guard = 0.55 * params.T;
  if (slow_guard < 0) slow_guard = 4.0 / params.PRF;

  const double half_aperture = scene.aperture_time / 2.0;
  double t_min = std::numeric_limits<double>::max();
  double t_max = std::numeric_limits<double>::lowest();
  double eta_min = std::numeric_limits<double>::max();
  double eta_max = std::numeric_limits<double>::lowest();
  for (const PointTarget& target : scene.targets) {
    const double eta_a = target.eta_c - half_aperture;
    const double eta_b = target.eta_c + half_aperture;
    eta_min = std::min(eta_min, eta_a);
    eta_max = std::max(eta_max, eta_b);
    // R(eta) over the aperture: extremes at the endpoints and at eta = 0.
    double r_lo = slant_range(target, params.v, eta_a);
    double r_hi = r_lo;
    for (double r : {slant_range(target, params.v, eta_b),
                     (eta_a <= 0 && 0 <= eta_b) ? target.r0 : r_lo}) {
      r_lo = std::min(r_lo, r);
      r_hi = std::max(r_hi, r);
    }
    t_min = std::min(t_min, 2.0 * r_lo / params.c - params.T / 2.0);
    t_max = std::max(t_max, 2.0 * r_hi / params.c + params.T / 2.0);
  }
  t_min -= fast_guard;
  t_max += fast_guard;
  eta_min -= slow_guard;
  eta_max += slow_guard;

  auto round_up4 = [](double count) {
    auto n = static_cast<std::size_t>(std::ceil(count));
    return (n + 3) / 4 * 4;
  };
  GridSpec grid;
  grid.t0 = t_min;
  grid.eta0 = eta_min;
  grid.cols = round_up4((t_max - t_min) * params.Fr);
  grid.rows = round_up4((eta_max - eta_min) * params.PRF);
  return grid;
}

}  // namespace sar
