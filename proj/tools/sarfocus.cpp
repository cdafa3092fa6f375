// sarfocus: stripmap SAR toolkit front end.
//
// Subcommands: simulate, focus-rda, focus-wk, estimate-dc, despeckle, analyze,
// render. Exit codes: 0 success, 2 usage, 3 I/O, 4 file format, 5 invariant
// violation, 6 domain mismatch, 7 estimator failure, 8 misfocus, 1 internal.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sar/config.hpp"
#include "sar/doppler.hpp"
#include "sar/error.hpp"
#include "sar/metrics.hpp"
#include "sar/raster_io.hpp"
#include "sar/rda.hpp"
#include "sar/simulate.hpp"
#include "sar/speckle.hpp"
#include "sar/wk.hpp"

namespace {

int exit_code_for(sar::ErrorKind kind) {
  switch (kind) {
    case sar::ErrorKind::argument: return 2;
    case sar::ErrorKind::io: return 3;
    case sar::ErrorKind::format: return 4;
    case sar::ErrorKind::invariant: return 5;
    case sar::ErrorKind::domain: return 6;
    case sar::ErrorKind::estimate: return 7;
    case sar::ErrorKind::misfocus: return 8;
  }
  return 1;
}

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  2  usage error (unknown flag, bad argument)\n"
    "  3  I/O failure (missing or unwritable file)\n"
    "  4  malformed file contents\n"
    "  5  parameter or invariant violation\n"
    "  6  raster domain mismatch\n"
    "  7  estimator could not produce a value\n"
    "  8  point-target analysis found no usable peak\n";

struct WindowArg {
  std::size_t r0 = 0, r1 = 0, c0 = 0, c1 = 0;
  bool set = false;
};

// Parses "r0:r1,c0:c1" (half-open) into a window.
WindowArg parse_window(const std::string& text) {
  WindowArg w;
  if (std::sscanf(text.c_str(), "%zu:%zu,%zu:%zu", &w.r0, &w.r1, &w.c0, &w.c1) != 4) {
    sar::raise(sar::ErrorKind::argument,
               "window must be r0:r1,c0:c1 (half-open), got '" + text + "'");
  }
  w.set = true;
  return w;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) sar::raise(sar::ErrorKind::io, "cannot create output file " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sarfocus: stripmap SAR simulation, focusing and analysis"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);

  // --- simulate -------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("simulate", "Simulate raw point-target echoes");
    auto config = std::make_shared<std::string>();
    auto scene_path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    auto aperture = std::make_shared<double>(0);
    auto rows = std::make_shared<std::size_t>(0);
    auto cols = std::make_shared<std::size_t>(0);
    auto t0 = std::make_shared<double>(0);
    auto eta0 = std::make_shared<double>(0);
    auto snr = std::make_shared<double>();
    auto seed = std::make_shared<std::uint64_t>(0);
    auto no_rvp = std::make_shared<bool>(false);
    auto allow_us = std::make_shared<bool>(false);
    cmd->add_option("--config", *config, "radar parameter file")->required();
    cmd->add_option("--scene", *scene_path, "scene file")->required();
    cmd->add_option("--aperture", *aperture, "synthetic-aperture dwell [s]")->required();
    cmd->add_option("--out", *out_path, "output raster")->required();
    cmd->add_option("--rows", *rows, "grid rows (0 = auto)");
    cmd->add_option("--cols", *cols, "grid cols (0 = auto)");
    auto* t0_opt = cmd->add_option("--t0", *t0, "fast time of column 0 [s]");
    auto* eta0_opt = cmd->add_option("--eta0", *eta0, "slow time of row 0 [s]");
    auto* snr_opt = cmd->add_option("--snr", *snr, "per-sample SNR [dB]");
    cmd->add_option("--seed", *seed, "noise seed");
    cmd->add_flag("--no-rvp", *no_rvp, "drop the residual video phase term");
    cmd->add_flag("--allow-undersampled", *allow_us, "permit Fr < B");
    cmd->callback([=] {
      const sar::RadarParams params = sar::load_radar_params(*config);
      const sar::Scene scene = sar::load_scene(*scene_path, *aperture);
      sar::GridSpec grid = sar::auto_grid(scene, params);
      if (*rows) grid.rows = *rows;
      if (*cols) grid.cols = *cols;
      if (t0_opt->count()) grid.t0 = *t0;
      if (eta0_opt->count()) grid.eta0 = *eta0;
      sar::SimOptions opts;
      opts.include_rvp = !*no_rvp;
      opts.allow_undersampled = *allow_us;
      if (snr_opt->count()) opts.noise_snr_db = *snr;
      opts.noise_seed = *seed;
      sar::write_raster(sar::simulate_raw(scene, params, grid, opts), *out_path);
      std::cout.precision(12);
      std::cout << "rows = " << grid.rows << "\ncols = " << grid.cols
                << "\nt0 = " << grid.t0 << "\neta0 = " << grid.eta0 << "\n";
    });
  }

  // --- focus-rda ------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("focus-rda", "Range-Doppler focusing");
    auto config = std::make_shared<std::string>();
    auto in_path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    auto rcmc = std::make_shared<std::string>("interp");
    auto estimate_path = std::make_shared<std::string>();
    auto opts = std::make_shared<sar::RdaOptions>();
    cmd->add_option("--config", *config)->required();
    cmd->add_option("--in", *in_path, "raw raster")->required();
    cmd->add_option("--out", *out_path, "focused raster")->required();
    cmd->add_option("--rcmc", *rcmc, "RCMC mode: interp | freq2d")
        ->check(CLI::IsMember({"interp", "freq2d"}));
    auto* fdc_opt = cmd->add_option("--fdc", opts->f_dc, "unambiguous Doppler centroid [Hz]");
    auto* frac_opt =
        cmd->add_option("--fdc-frac", opts->f_dc_frac, "fractional Doppler centroid [Hz]");
    cmd->add_option("--estimate", *estimate_path,
                    "Doppler estimate file; --fdc/--fdc-frac override it");
    cmd->add_option("--kernel", opts->interp_kernel_len, "interpolation taps (4|8|16)");
    cmd->add_option("--rcmc-center", opts->rcmc_r0_center,
                    "freq2d reference range [m] (0 = mid-swath)");
    cmd->callback([=] {
      const sar::RadarParams params = sar::load_radar_params(*config);
      if (!estimate_path->empty()) {
        const double fdc_flag = opts->f_dc;
        const double frac_flag = opts->f_dc_frac;
        std::ifstream in(*estimate_path);
        if (!in) sar::raise(sar::ErrorKind::io, "cannot open estimate " + *estimate_path);
        std::stringstream text;
        text << in.rdbuf();
        sar::apply_estimate(sar::parse_doppler_estimate(text.str()), *opts);
        if (fdc_opt->count()) opts->f_dc = fdc_flag;
        if (frac_opt->count()) opts->f_dc_frac = frac_flag;
      }
      opts->rcmc_mode = *rcmc == "interp" ? sar::RcmcMode::range_doppler_interp
                                          : sar::RcmcMode::freq2d_phase;
      sar::write_raster(sar::focus_rda(sar::read_raster(*in_path), params, *opts),
                        *out_path);
    });
  }

  // --- focus-wk ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("focus-wk", "Wavenumber (omega-k) focusing");
    auto config = std::make_shared<std::string>();
    auto in_path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    auto estimate_path = std::make_shared<std::string>();
    auto opts = std::make_shared<sar::WkOptions>();
    cmd->add_option("--config", *config)->required();
    cmd->add_option("--in", *in_path, "raw raster")->required();
    cmd->add_option("--out", *out_path, "focused raster")->required();
    cmd->add_option("--rref", opts->r_ref, "reference slant range [m] (0 = config R_ref)");
    auto* fdc_opt = cmd->add_option("--fdc", opts->f_dc, "unambiguous Doppler centroid [Hz]");
    auto* frac_opt =
        cmd->add_option("--fdc-frac", opts->f_dc_frac, "fractional Doppler centroid [Hz]");
    cmd->add_option("--estimate", *estimate_path,
                    "Doppler estimate file; --fdc/--fdc-frac override it");
    cmd->add_option("--kernel", opts->stolt_kernel_len, "Stolt interpolation taps (4|8|16)");
    cmd->callback([=] {
      const sar::RadarParams params = sar::load_radar_params(*config);
      if (!estimate_path->empty()) {
        const double fdc_flag = opts->f_dc;
        const double frac_flag = opts->f_dc_frac;
        std::ifstream in(*estimate_path);
        if (!in) sar::raise(sar::ErrorKind::io, "cannot open estimate " + *estimate_path);
        std::stringstream text;
        text << in.rdbuf();
        sar::apply_estimate(sar::parse_doppler_estimate(text.str()), *opts);
        if (fdc_opt->count()) opts->f_dc = fdc_flag;
        if (frac_opt->count()) opts->f_dc_frac = frac_flag;
      }
      sar::write_raster(sar::focus_wk(sar::read_raster(*in_path), params, *opts),
                        *out_path);
    });
  }

  // --- estimate-dc ------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("estimate-dc", "Doppler centroid estimation");
    auto config = std::make_shared<std::string>();
    auto in_path = std::make_shared<std::string>();
    auto method = std::make_shared<std::string>("spectrum");
    auto resolve = std::make_shared<bool>(false);
    auto compress = std::make_shared<bool>(false);
    auto cols_arg = std::make_shared<std::string>();
    auto window_arg = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    cmd->add_option("--config", *config)->required();
    cmd->add_option("--in", *in_path, "raster (range-compressed for slope)")->required();
    cmd->add_option("--method", *method, "spectrum | accc | slope")
        ->check(CLI::IsMember({"spectrum", "accc", "slope"}));
    cmd->add_flag("--resolve", *resolve,
                  "resolve the ambiguity: fractional estimate plus slope-based coarse");
    cmd->add_flag("--range-compress", *compress,
                  "matched-filter the raster in fast time before estimating");
    cmd->add_option("--cols", *cols_arg, "range-cell span a:b (half-open)");
    cmd->add_option("--window", *window_arg, "trajectory window r0:r1,c0:c1");
    cmd->add_option("--out", *out_path, "output file (default stdout)");
    cmd->callback([=] {
      const sar::RadarParams params = sar::load_radar_params(*config);
      sar::Raster rc = sar::read_raster(*in_path);
      if (*compress) rc = sar::range_compress(rc, params);

      sar::ColumnSpan span;
      if (!cols_arg->empty()) {
        std::size_t a = 0, b = 0;
        if (std::sscanf(cols_arg->c_str(), "%zu:%zu", &a, &b) != 2 || b <= a) {
          sar::raise(sar::ErrorKind::argument, "--cols must be a:b with b > a");
        }
        span = {a, b - a};
      }
      sar::RasterWindow window{0, rc.rows, 0, rc.cols};
      if (!window_arg->empty()) {
        const WindowArg w = parse_window(*window_arg);
        window = {w.r0, w.r1, w.c0, w.c1};
      }

      auto frac_estimate = [&](const std::string& m) {
        return m == "accc" ? sar::estimate_frac_accc(rc, span)
                           : sar::estimate_frac_spectrum(rc, span);
      };

      sar::DopplerEstimate est;
      const bool short_block = cols_arg->empty() && rc.cols < 230;
      if (*resolve) {
        const sar::TrajectorySlope slope = sar::trajectory_slope(rc, window);
        const double coarse = sar::coarse_dc_from_slope(slope, params);
        const double frac = frac_estimate(*method == "slope" ? "spectrum" : *method);
        est = sar::resolve_ambiguity(coarse, frac, params.PRF);
        est.method = *method == "slope" ? "slope+spectrum" : "slope+" + *method;
      } else if (*method == "slope") {
        const sar::TrajectorySlope slope = sar::trajectory_slope(rc, window);
        const double coarse = sar::coarse_dc_from_slope(slope, params);
        est.prf = params.PRF;
        est.M = std::llround(coarse / params.PRF);
        est.f_dc_frac = coarse - static_cast<double>(est.M) * params.PRF;
        est.f_dc = coarse;
        est.method = "slope";
      } else {
        est.prf = params.PRF;
        est.f_dc_frac = frac_estimate(*method);
        est.M = 0;
        est.f_dc = est.f_dc_frac;
        est.method = *method;
      }
      if (short_block && *method != "slope" && est.warning.empty()) {
        est.warning = "spectrum averaged over only " + std::to_string(rc.cols) +
                      " range cells (230 preferred)";
      }
      write_text(*out_path, sar::format_doppler_estimate(est));
    });
  }

  // --- despeckle ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("despeckle", "Sliding-window median filter");
    auto in_path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    auto window = std::make_shared<std::string>("6x6");
    cmd->add_option("--in", *in_path, "input raster")->required();
    cmd->add_option("--out", *out_path, "filtered raster (magnitude)")->required();
    cmd->add_option("--window", *window, "filter size MxN (rows x cols)");
    cmd->callback([=] {
      std::size_t m = 0, n = 0;
      if (std::sscanf(window->c_str(), "%zux%zu", &m, &n) != 2 || m == 0 || n == 0) {
        sar::raise(sar::ErrorKind::argument, "--window must be MxN, got '" + *window + "'");
      }
      const sar::Raster img = sar::read_raster(*in_path);
      sar::write_raster(sar::despeckle_raster(img, {m, n}), *out_path);
    });
  }

  // --- analyze -------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("analyze", "Point-target impulse-response report");
    auto in_path = std::make_shared<std::string>();
    auto row = std::make_shared<std::size_t>(0);
    auto col = std::make_shared<std::size_t>(0);
    auto window = std::make_shared<std::size_t>(64);
    auto csv_path = std::make_shared<std::string>();
    cmd->add_option("--in", *in_path, "focused raster")->required();
    cmd->add_option("--row", *row, "expected peak row")->required();
    cmd->add_option("--col", *col, "expected peak column")->required();
    cmd->add_option("--window", *window, "analysis window [cells]");
    cmd->add_option("--csv", *csv_path, "also write a one-row CSV");
    cmd->callback([=] {
      const sar::Raster img = sar::read_raster(*in_path);
      const sar::IrfReport rep = sar::analyze_point_target(img, *row, *col, *window);
      std::cout << sar::irf_report_kv(rep);
      if (!csv_path->empty()) {
        write_text(*csv_path, sar::irf_csv_header() + "\n" + sar::irf_csv_row(rep) + "\n");
      }
    });
  }

  // --- render ----------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("render", "8-bit P5 graymap of 20 log10 |x|");
    auto in_path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    auto opts = std::make_shared<sar::RenderOptions>();
    cmd->add_option("--in", *in_path, "input raster")->required();
    cmd->add_option("--out", *out_path, "output .pgm")->required();
    cmd->add_option("--floor", opts->db_floor, "black level [dB below peak]");
    cmd->add_option("--clip", opts->percentile_clip, "0 dB reference percentile");
    cmd->callback([=] {
      sar::render_magnitude(sar::read_raster(*in_path), *out_path, *opts);
    });
  }

  if (argc <= 1) {
    std::cout << app.help();
    return 2;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return 2;
  } catch (const sar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
