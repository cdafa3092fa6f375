#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sar/raster.hpp"

namespace sar {

struct IrfReport {
  std::size_t peak_row = 0;
  std::size_t peak_col = 0;
  double peak_mag = 0;          // linear
  double peak_phase = 0;        // rad, at the discrete peak cell
  double range_width_3db = 0;   // columns, measured on 16x interpolated cut
  double az_width_3db = 0;      // rows
  double pslr_db = 0;           // worst of the two axis cuts
  double islr_db = 0;           // worst of the two axis cuts
};

// Impulse-response metrics of one dominant point response. The global peak
// must lie within window/2 of expected (else Error(misfocus)); a peak that
// does not clear twice the window's mean magnitude is no peak at all. Widths,
// PSLR and ISLR are measured on 16x zero-padded DFT interpolations of the two
// axis cuts through the peak; -3 dB crossings are located by linear
// interpolation and the main lobe spans the first nulls of each cut.
IrfReport analyze_point_target(const Raster& img, std::size_t expected_row,
                               std::size_t expected_col, std::size_t window = 64);

// Fraction of total energy lying within +-halfwidth columns of `column`.
// Monotone non-decreasing in halfwidth; 0 for an empty/zero raster.
double energy_concentration(const Raster& rd, std::size_t column, std::size_t halfwidth);

std::string irf_report_kv(const IrfReport& rep);
std::string irf_csv_header();
std::string irf_csv_row(const IrfReport& rep);

// 16x zero-padded DFT interpolation of a complex cut (exposed for tests).
std::vector<std::complex<double>> interpolate_cut(const std::vector<std::complex<double>>& cut,
                                                  std::size_t factor = 16);

}  // namespace sar
