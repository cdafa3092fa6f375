#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "sar/error.hpp"
#include "sar/fft.hpp"
#include "sar/geometry.hpp"
#include "sar/metrics.hpp"
#include "sar/rda.hpp"
#include "sar/simulate.hpp"
#include "sar/wk.hpp"
#include "support.hpp"

using namespace sar;
using testsup::kPi;

namespace {

std::pair<std::size_t, std::size_t> argmax_cell(const Raster& r) {
  std::size_t pr = 0, pc = 0;
  double best = -1;
  for (std::size_t i = 0; i < r.rows; ++i) {
    for (std::size_t j = 0; j < r.cols; ++j) {
      if (std::abs(r.at(i, j)) > best) {
        best = std::abs(r.at(i, j));
        pr = i;
        pc = j;
      }
    }
  }
  return {pr, pc};
}

using testsup::analytic_spectrum;

}  // namespace

TEST_SUITE("wk") {

TEST_CASE("spectrum_2d of a grid-origin impulse is flat with unit magnitude") {
  const RadarParams p = testsup::desk_params();
  Raster r(32, 48);
  r.t0 = 6.5e-3;
  r.Fr = p.Fr;
  r.eta0 = -0.01;
  r.PRF = p.PRF;
  r.at(0, 0) = 1.0;
  const Raster spec = spectrum_2d(r, 0.0);
  CHECK(spec.domain == Domain::freq_freq);
  for (const auto& x : spec.data) CHECK(std::abs(x) == doctest::Approx(1.0).epsilon(1e-12));
  // Fast-frequency axis is baseband.
  CHECK(spec.fast_freq(0) == doctest::Approx(-p.Fr / 2.0));
}

TEST_CASE("spectrum_2d round trip and Parseval") {
  const RadarParams p = testsup::desk_params();
  const auto ds = testsup::desk_point_scene(p);
  const Raster raw = simulate_raw(ds.scene, p, ds.grid);
  const Raster spec = spectrum_2d(raw, 0.0);

  const double n = static_cast<double>(raw.rows) * static_cast<double>(raw.cols);
  CHECK(spec.energy() / n == doctest::Approx(raw.energy()).epsilon(1e-12));

  const Raster back = inverse_spectrum_2d(spec);
  CHECK(back.domain == Domain::time_time);
  CHECK(back.t0 == raw.t0);
  CHECK(back.eta0 == raw.eta0);
  double diff = 0, ref = 0;
  for (std::size_t i = 0; i < raw.data.size(); ++i) {
    diff += std::norm(back.data[i] - raw.data[i]);
    ref += std::norm(raw.data[i]);
  }
  CHECK(std::sqrt(diff / ref) < 1e-10);
}

TEST_CASE("echo energy is confined to the chirp band") {
  // Rectangular-chirp spectra leak ~1/sqrt(TBP) outside the band; the full
  // 41.75 us pulse (TBP ~ 1250) keeps the leakage under the 1% asserted here.
  const RadarParams p = sar::make_radar_params(5.3e9, 30.116e6, 41.75e-6, 60.232e6,
                                               1256.98, 7062.0, 988650.0);
  const auto ds =
      testsup::desk_point_scene(p, testsup::kDeskAperture, 444, 3200, 222, 1600);
  const Raster spec = spectrum_2d(simulate_raw(ds.scene, p, ds.grid), 0.0);
  double in_band = 0, total = 0;
  for (std::size_t i = 0; i < spec.rows; ++i) {
    for (std::size_t j = 0; j < spec.cols; ++j) {
      const double e = std::norm(spec.at(i, j));
      total += e;
      if (std::abs(spec.fast_freq(j)) <= p.B / 2.0) in_band += e;
    }
  }
  CHECK(in_band / total >= 0.99);
}

TEST_CASE("remove_range_chirp limits and inverses") {
  const RadarParams p = testsup::desk_params();
  const auto ds = testsup::desk_point_scene(p);
  const Raster spec = spectrum_2d(simulate_raw(ds.scene, p, ds.grid), 0.0);

  RadarParams huge_beta = p;
  huge_beta.beta = 1e30;
  huge_beta.B = 1e30 * huge_beta.T;  // keep beta*T == B
  huge_beta.Fr = huge_beta.B;
  const Raster same = remove_range_chirp(spec, huge_beta);
  double dmax = 0;
  for (std::size_t i = 0; i < spec.data.size(); ++i) {
    dmax = std::max(dmax, std::abs(same.data[i] - spec.data[i]));
  }
  CHECK(dmax < 1e-9);

  // Applying twice then multiplying by the conjugate phase twice is identity.
  Raster twice = remove_range_chirp(remove_range_chirp(spec, p), p);
  for (std::size_t i = 0; i < twice.rows; ++i) {
    for (std::size_t j = 0; j < twice.cols; ++j) {
      const double f_t = twice.fast_freq(j);
      twice.at(i, j) *= std::polar(1.0, -2.0 * kPi * f_t * f_t / p.beta);
    }
  }
  double diff = 0, ref = 0;
  for (std::size_t i = 0; i < spec.data.size(); ++i) {
    diff += std::norm(twice.data[i] - spec.data[i]);
    ref += std::norm(spec.data[i]);
  }
  CHECK(std::sqrt(diff / ref) < 1e-10);

  // Energy is preserved exactly by the unit-modulus multiply.
  CHECK(remove_range_chirp(spec, p).energy() ==
        doctest::Approx(spec.energy()).epsilon(1e-12));
}

TEST_CASE("removing the chirp phase compresses a single pulse") {
  const RadarParams p = testsup::desk_params();
  // One transmitted pulse centered mid-raster, single row.
  Raster r(1, 512);
  r.t0 = 0;
  r.Fr = p.Fr;
  r.eta0 = 0;
  r.PRF = p.PRF;
  const double tau = 256.0 / p.Fr;
  for (std::size_t j = 0; j < r.cols; ++j) {
    const double u = r.fast_time(j) - tau;
    if (std::abs(u) <= p.T / 2.0) r.at(0, j) = std::polar(1.0, kPi * p.beta * u * u);
  }
  const Raster spec = remove_range_chirp(spectrum_2d(r, 0.0), p);
  const Raster pulse = inverse_spectrum_2d(spec);
  std::vector<std::complex<double>> cut;
  for (std::size_t j = 236; j < 276; ++j) cut.push_back(pulse.at(0, j));
  const auto fine = interpolate_cut(cut, 16);
  std::vector<double> mag(fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i) mag[i] = std::abs(fine[i]);
  CHECK(testsup::width_3db(mag, 16.0) == doctest::Approx(0.886 * p.Fr / p.B).epsilon(0.10));
}

TEST_CASE("range_freq_map frozen value and zero-Doppler reduction") {
  const RadarParams p = testsup::desk_params();
  // Frozen from direct evaluation with the default c:
  // sqrt(f_c^2 - (c * 1256.98 / (2 * 7062))^2).
  CHECK(std::abs(range_freq_map(p, 0.0, -1256.98) - 5.2999328449e9) < 1e3);
  for (double f_t : {-12e6, 0.0, 7e6}) {
    CHECK(range_freq_map(p, f_t, 0.0) == doctest::Approx(p.f_c + f_t).epsilon(1e-15));
  }
  CHECK(range_freq_map(p, 0.0, 1e12) == 0.0);  // evanescent guard
}

TEST_CASE("reference phase cancels exactly at the reference range") {
  const RadarParams p = testsup::desk_params();
  const double r0 = p.R_ref;
  const double t0_grid = 2.0 * r0 / p.c - 160.0 / p.Fr;
  const double eta0_grid = -222.0 / p.PRF;
  const Raster spec =
      analytic_spectrum(p, r0, t0_grid, eta0_grid, 444, 420, testsup::kDeskAperture);

  RefMultiplyStats stats;
  const Raster out = reference_multiply(remove_range_chirp(spec, p), p, r0, &stats);
  CHECK(stats.zeroed == 0);
  CHECK(out.energy() == doctest::Approx(spec.energy()).epsilon(1e-12));

  // In-band residual phase (minus the azimuth grid reference, which positions
  // the rows) must vanish.
  double worst = 0;
  std::size_t counted = 0;
  for (std::size_t i = 0; i < out.rows; ++i) {
    const double f_eta = out.doppler(i);
    for (std::size_t j = 0; j < out.cols; ++j) {
      if (std::abs(out.at(i, j)) < 0.5) continue;
      const double expected = 2.0 * kPi * f_eta * eta0_grid;
      const double resid = std::remainder(std::arg(out.at(i, j)) - expected, 2.0 * kPi);
      worst = std::max(worst, std::abs(resid));
      ++counted;
    }
  }
  CHECK(counted > 1000);
  CHECK(worst < 1e-6);
}

TEST_CASE("reference_multiply rejects widely evanescent spectra") {
  RadarParams p = testsup::desk_params();
  p.v = 1.0;  // c f_eta / (2v) dwarfs f_c for most Doppler bins
  Raster spec(64, 16);
  spec.Fr = p.Fr;
  spec.PRF = p.PRF;
  spec.domain = Domain::freq_freq;
  spec.time_origin = 6.5e-3;
  const double col_step = spec.fast_freq_step();
  const double row_step = spec.doppler_step();
  spec.t0 = -8.0 * col_step;
  spec.eta0 = -32.0 * row_step;
  for (auto& x : spec.data) x = 1.0;
  CHECK_THROWS_AS(reference_multiply(spec, p, p.R_ref, nullptr), Error);
}

TEST_CASE("stolt map is monotone and the zero-Doppler row is untouched") {
  const RadarParams p = testsup::desk_params();
  for (double f_eta : {0.0, -831.0, 2100.0}) {
    double prev = stolt_source_freq(p, -p.B / 2.0, f_eta);
    for (double f = -p.B / 2.0 + 1e5; f <= p.B / 2.0; f += 1e5) {
      const double cur = stolt_source_freq(p, f, f_eta);
      CHECK(cur > prev);
      prev = cur;
    }
  }
  CHECK(stolt_source_freq(p, 1.25e6, 0.0) == doctest::Approx(1.25e6).epsilon(1e-15));

  // f_eta = 0 row maps onto itself sample for sample.
  const auto ds = testsup::desk_point_scene(p);
  const Raster spec = spectrum_2d(simulate_raw(ds.scene, p, ds.grid), 0.0);
  WkOptions opts;
  const Raster res = stolt_resample(spec, p, opts);
  CHECK(res.domain == Domain::stolt);
  const auto zero_row = static_cast<std::size_t>(
      std::llround(-spec.eta0 / spec.doppler_step()));
  CHECK(spec.doppler(zero_row) == 0.0);
  for (std::size_t j = 0; j < spec.cols; ++j) {
    CHECK(res.at(zero_row, j) == spec.at(zero_row, j));
  }
}

TEST_CASE("stolt_resample rejects a wider output grid") {
  const RadarParams p = testsup::desk_params();
  Raster spec(8, 16);
  spec.Fr = p.Fr;
  spec.PRF = p.PRF;
  spec.domain = Domain::freq_freq;
  WkOptions opts;
  opts.output_cols = 32;
  CHECK_THROWS_AS(stolt_resample(spec, p, opts), Error);
}

TEST_CASE("a narrower Stolt output grid still focuses the reference target") {
  const RadarParams p = testsup::desk_params();
  const auto ds = testsup::desk_point_scene(p);
  WkOptions opts;
  opts.r_ref = ds.scene.targets[0].r0;
  opts.output_cols = 360;  // keep the bin spacing, drop the outermost bins
  const Raster img = focus_wk(simulate_raw(ds.scene, p, ds.grid), p, opts);
  CHECK(img.cols == 360);
  const auto [pr, pc] = argmax_cell(img);
  CHECK(pr == ds.peak_row);
  CHECK(pc == 0);
}

TEST_CASE("post-Stolt phase of an off-reference target is linear in f_t") {
  const RadarParams p = testsup::desk_params();
  const auto ds = testsup::desk_point_scene(p);
  const double r_ref = ds.scene.targets[0].r0 - 60.0 * p.c / (2.0 * p.Fr);
  const Raster raw = simulate_raw(ds.scene, p, ds.grid);

  Raster spec = spectrum_2d(raw, 0.0);
  spec = remove_range_chirp(spec, p);
  spec = reference_multiply(spec, p, r_ref, nullptr);
  WkOptions opts;
  const Raster res = stolt_resample(spec, p, opts);

  const double expected_slope = -4.0 * kPi * (ds.scene.targets[0].r0 - r_ref) / p.c;
  const double band_az = fm_rates(p, ds.scene.targets[0].r0, 0.0).k_a * testsup::kDeskAperture;

  std::size_t rows_checked = 0;
  for (std::size_t i = 0; i < res.rows; ++i) {
    if (std::abs(res.doppler(i)) > 0.8 * band_az / 2.0) continue;
    // Gather in-band cells of this row.
    std::vector<double> fs, phases;
    double row_max = 0;
    for (std::size_t j = 0; j < res.cols; ++j) row_max = std::max(row_max, std::abs(res.at(i, j)));
    for (std::size_t j = 0; j < res.cols; ++j) {
      const double f = res.fast_freq(j);
      if (std::abs(f) > 0.8 * p.B / 2.0 || std::abs(res.at(i, j)) < 0.3 * row_max) continue;
      double ph = std::arg(res.at(i, j));
      if (!fs.empty()) {
        // Sequential unwrap; per-bin increments stay below pi here.
        ph = phases.back() + std::remainder(ph - phases.back(), 2.0 * kPi);
      }
      fs.push_back(f);
      phases.push_back(ph);
    }
    if (fs.size() < 32) continue;
    ++rows_checked;

    // Least-squares line phase = a + slope f.
    const double n = static_cast<double>(fs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      sx += fs[k];
      sy += phases[k];
      sxx += fs[k] * fs[k];
      sxy += fs[k] * phases[k];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    double ss = 0;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const double e = phases[k] - (intercept + slope * fs[k]);
      ss += e * e;
    }
    CHECK(slope == doctest::Approx(expected_slope).epsilon(0.01));
    CHECK(std::sqrt(ss / n) < 0.05);
  }
  CHECK(rows_checked >= 100);
}

TEST_CASE("focus_wk puts a reference-range target at the grid origin with full gain") {
  const RadarParams p = testsup::desk_params();
  // Ideal-spectrum oracle (the analog of the rda ideal-chirp gain oracle):
  // synthesize the closed-form target spectrum at r0 = r_ref, focus its time-
  // domain counterpart, and compare the peak to the coherent bound, which the
  // in-band-only construction makes tight.
  const double r0 = p.R_ref;
  const double t0_grid = 2.0 * r0 / p.c - 160.0 / p.Fr;
  const double eta0_grid = -222.0 / p.PRF;
  const Raster spec =
      analytic_spectrum(p, r0, t0_grid, eta0_grid, 444, 420, testsup::kDeskAperture);
  double sum_mag = 0;
  for (const auto& x : spec.data) sum_mag += std::abs(x);
  const double oracle =
      sum_mag / (static_cast<double>(spec.rows) * static_cast<double>(spec.cols));

  const Raster synthetic_raw = inverse_spectrum_2d(spec);
  WkOptions opts;
  opts.r_ref = r0;
  const Raster img = focus_wk(synthetic_raw, p, opts);
  CHECK(img.domain == Domain::time_time);

  const auto [pr, pc] = argmax_cell(img);
  CHECK(pr == 222);  // row of eta = 0
  CHECK(pc == 0);    // zero offset from the reference range
  CHECK(std::abs(img.at(pr, pc)) == doctest::Approx(oracle).epsilon(0.01));

  // Stolt is the only lossy stage; under 1% on an in-band target, and no
  // spurious amplification beyond interpolation ripple.
  Raster chain = remove_range_chirp(spec, p);
  chain = reference_multiply(chain, p, opts.r_ref, nullptr);
  const double before = chain.energy();
  const Raster after = stolt_resample(chain, p, opts);
  CHECK(after.energy() > 0.99 * before);
  CHECK(after.energy() < before * 1.001);

  // The simulated-echo chain agrees with the ideal one to a few percent; the
  // difference is the stationary-phase ripple of a real chirp spectrum.
  const auto ds = testsup::desk_point_scene(p);
  const Raster sim_img = focus_wk(simulate_raw(ds.scene, p, ds.grid), p, opts);
  const auto [sr, sc] = argmax_cell(sim_img);
  CHECK(sr == ds.peak_row);
  CHECK(sc == 0);
  CHECK(std::abs(sim_img.at(sr, sc)) > 0.8 * oracle);
}

TEST_CASE("focus_wk and focus_rda agree on a five-target desk scene") {
  const RadarParams p = testsup::desk_params();
  auto ds = testsup::desk_point_scene(p, testsup::kDeskAperture, 444, 560, 222, 260);
  const double cell = p.c / (2.0 * p.Fr);
  const double r_mid = ds.scene.targets[0].r0;
  ds.scene.targets[0].sigma = {1.0, 0.0};
  ds.scene.targets.push_back({{0.8, 0.2}, r_mid - 104.0 * cell, 0.0});
  ds.scene.targets.push_back({{0.7, -0.4}, r_mid - 51.0 * cell, 0.0});
  ds.scene.targets.push_back({{1.2, 0.1}, r_mid + 63.0 * cell, 0.0});
  ds.scene.targets.push_back({{0.4, 0.9}, r_mid + 118.0 * cell, 0.0});

  const Raster raw = simulate_raw(ds.scene, p, ds.grid);
  RdaOptions rda_opts;
  const Raster img_rda = focus_rda(raw, p, rda_opts);
  WkOptions wk_opts;
  wk_opts.r_ref = r_mid;
  const Raster img_wk = focus_wk(raw, p, wk_opts);

  for (const PointTarget& t : ds.scene.targets) {
    const auto rda_col = std::llround((2.0 * t.r0 / p.c - img_rda.t0) * p.Fr);
    const auto wk_col_ll = std::llround((2.0 * t.r0 / p.c - img_wk.t0) * p.Fr);
    const auto wk_col =
        static_cast<long long>((wk_col_ll % static_cast<long long>(img_wk.cols) +
                                static_cast<long long>(img_wk.cols)) %
                               static_cast<long long>(img_wk.cols));

    auto local_peak = [](const Raster& img, long long er, long long ec) {
      std::size_t pr = 0, pc = 0;
      double best = -1;
      for (long long i = er - 6; i <= er + 6; ++i) {
        for (long long j = ec - 6; j <= ec + 6; ++j) {
          const auto jj = static_cast<std::size_t>(
              (j % static_cast<long long>(img.cols) + static_cast<long long>(img.cols)) %
              static_cast<long long>(img.cols));
          const double m = std::abs(img.at(static_cast<std::size_t>(i), jj));
          if (m > best) {
            best = m;
            pr = static_cast<std::size_t>(i);
            pc = jj;
          }
        }
      }
      return std::pair<std::size_t, std::size_t>(pr, pc);
    };

    const auto [ra, ca] = local_peak(img_rda, static_cast<long long>(ds.peak_row), rda_col);
    const auto [rw, cw] = local_peak(img_wk, static_cast<long long>(ds.peak_row), wk_col);

    // Same azimuth row and the same physical range cell within +-1. The
    // wavenumber image is range-periodic about r_ref, so compare modulo the
    // raster's range span.
    CHECK(std::abs(static_cast<long long>(ra) - static_cast<long long>(rw)) <= 1);
    const double range_a = img_rda.fast_time(ca) * p.c / 2.0;
    const double range_w = img_wk.fast_time(cw) * p.c / 2.0;
    const double span = static_cast<double>(img_wk.cols) * cell;
    const double wrapped = std::remainder(range_a - range_w, span);
    CHECK(std::abs(wrapped) <= 1.5 * cell);
  }
}

TEST_CASE("wk and rda impulse responses agree within 15% on the same scene") {
  const RadarParams p = testsup::desk_params();
  const auto ds = testsup::desk_point_scene(p);
  const Raster raw = simulate_raw(ds.scene, p, ds.grid);

  RdaOptions rda_opts;
  const Raster img_rda = focus_rda(raw, p, rda_opts);
  const IrfReport rep_rda = analyze_point_target(img_rda, ds.peak_row, ds.peak_col, 64);

  WkOptions wk_opts;
  wk_opts.r_ref = ds.scene.targets[0].r0 - 60.0 * p.c / (2.0 * p.Fr);
  const Raster img_wk = focus_wk(raw, p, wk_opts);
  const IrfReport rep_wk = analyze_point_target(img_wk, ds.peak_row, 60, 48);

  CHECK(rep_wk.range_width_3db ==
        doctest::Approx(rep_rda.range_width_3db).epsilon(0.15));
  CHECK(rep_wk.az_width_3db == doctest::Approx(rep_rda.az_width_3db).epsilon(0.15));
}

TEST_CASE("changing the reference range shifts the peak by the documented offset") {
  const RadarParams p = testsup::desk_params();
  const auto ds = testsup::desk_point_scene(p);
  const Raster raw = simulate_raw(ds.scene, p, ds.grid);

  WkOptions a;
  a.r_ref = ds.scene.targets[0].r0;
  WkOptions b = a;
  const double shift_cells = 37.0;
  b.r_ref = a.r_ref - shift_cells * p.c / (2.0 * p.Fr);

  const auto cell_a = argmax_cell(focus_wk(raw, p, a));
  const auto cell_b = argmax_cell(focus_wk(raw, p, b));
  CHECK(cell_a.first == cell_b.first);
  const auto diff = (static_cast<long long>(cell_b.second) -
                     static_cast<long long>(cell_a.second) +
                     2 * static_cast<long long>(raw.cols)) %
                    static_cast<long long>(raw.cols);
  CHECK(diff == static_cast<long long>(shift_cells));
}

TEST_CASE("empty scene focuses to a zero image through the wavenumber chain") {
  const RadarParams p = testsup::desk_params();
  Scene empty;
  empty.aperture_time = 0.35;
  GridSpec grid{64, 64, 2.0 * 988650.0 / p.c, -0.02};
  WkOptions opts;
  const Raster img = focus_wk(simulate_raw(empty, p, grid), p, opts);
  CHECK(img.energy() == 0.0);
}

}  // TEST_SUITE
