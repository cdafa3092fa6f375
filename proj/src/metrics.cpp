#include "sar/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "sar/error.hpp"
#include "sar/fft.hpp"

namespace sar {

namespace {

struct CutMetrics {
  double width_3db = 0;  // original-sample units
  double pslr_db = 0;
  double islr_db = 0;
};

// -3 dB is half power: amplitude crossing at peak / sqrt(2), located by linear
// interpolation between interpolated samples.
double crossing(const std::vector<double>& mag, std::size_t from, long long dir,
                double level) {
  long long i = static_cast<long long>(from);
  const long long n = static_cast<long long>(mag.size());
  while (i + dir >= 0 && i + dir < n) {
    const long long j = i + dir;
    if (mag[static_cast<std::size_t>(j)] < level) {
      const double a = mag[static_cast<std::size_t>(i)];
      const double b = mag[static_cast<std::size_t>(j)];
      const double frac = a == b ? 0.0 : (a - level) / (a - b);
      return static_cast<double>(i) + static_cast<double>(dir) * frac;
    }
    i = j;
  }
  return static_cast<double>(std::clamp<long long>(i, 0, n - 1));
}

// First local minimum walking outward from the peak; bounds the main lobe.
std::size_t first_null(const std::vector<double>& mag, std::size_t peak, long long dir) {
  long long i = static_cast<long long>(peak);
  const long long n = static_cast<long long>(mag.size());
  while (i + dir > 0 && i + dir < n - 1) {
    i += dir;
    const double here = mag[static_cast<std::size_t>(i)];
    if (here <= mag[static_cast<std::size_t>(i - 1)] &&
        here <= mag[static_cast<std::size_t>(i + 1)]) {
      return static_cast<std::size_t>(i);
    }
  }
  return static_cast<std::size_t>(std::clamp<long long>(i + dir, 0, n - 1));
}

CutMetrics measure_cut(const std::vector<std::complex<double>>& cut, std::size_t factor) {
  const std::vector<std::complex<double>> fine = interpolate_cut(cut, factor);
  std::vector<double> mag(fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i) mag[i] = std::abs(fine[i]);

  const std::size_t peak =
      static_cast<std::size_t>(std::max_element(mag.begin(), mag.end()) - mag.begin());
  const double peak_mag = mag[peak];
  CutMetrics m;
  if (peak_mag <= 0) return m;

  const double level = peak_mag / std::sqrt(2.0);
  const double left = crossing(mag, peak, -1, level);
  const double right = crossing(mag, peak, +1, level);
  m.width_3db = (right - left) / static_cast<double>(factor);

  const std::size_t null_l = first_null(mag, peak, -1);
  const std::size_t null_r = first_null(mag, peak, +1);
  double sidelobe = 0;
  for (std::size_t i = 0; i < null_l; ++i) sidelobe = std::max(sidelobe, mag[i]);
  for (std::size_t i = null_r + 1; i < mag.size(); ++i) sidelobe = std::max(sidelobe, mag[i]);
  m.pslr_db = sidelobe > 0 ? 20.0 * std::log10(sidelobe / peak_mag)
                           : -std::numeric_limits<double>::infinity();

  double main_energy = 0, total_energy = 0;
  for (std::size_t i = 0; i < mag.size(); ++i) {
    const double p = mag[i] * mag[i];
    total_energy += p;
    if (i >= null_l && i <= null_r) main_energy += p;
  }
  const double side_energy = total_energy - main_energy;
  m.islr_db = main_energy > 0 && side_energy > 0
                  ? 10.0 * std::log10(side_energy / main_energy)
                  : -std::numeric_limits<double>::infinity();
  return m;
}

}  // namespace

std::vector<std::complex<double>> interpolate_cut(const std::vector<std::complex<double>>& cut,
                                                  std::size_t factor) {
  const std::size_t n = cut.size();
  if (n < 2 || factor < 2) return cut;
  Raster line(1, n);
  std::copy(cut.begin(), cut.end(), line.data.begin());
  line.Fr = 1;
  fft_rows(line, true);

  const std::size_t m = n * factor;
  Raster fine(1, m);
  fine.Fr = 1;
  const std::size_t half = n / 2;
  for (std::size_t k = 0; k < half; ++k) fine.at(0, k) = line.at(0, k);
  for (std::size_t k = half + 1; k < n; ++k) fine.at(0, m - n + k) = line.at(0, k);
  if (n % 2 == 0) {
    // Split the Nyquist bin to keep the interpolant real for real inputs.
    fine.at(0, half) = 0.5 * line.at(0, half);
    fine.at(0, m - half) = 0.5 * line.at(0, half);
  } else {
    fine.at(0, half) = line.at(0, half);
  }
  fft_rows(fine, false);
  // Undo the 1/m inverse scale relative to the n-point forward transform.
  const double scale = static_cast<double>(m) / static_cast<double>(n);
  std::vector<std::complex<double>> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = fine.at(0, i) * scale;
  return out;
}

IrfReport analyze_point_target(const Raster& img, std::size_t expected_row,
                               std::size_t expected_col, std::size_t window) {
  if (img.rows == 0 || img.cols == 0) {
    raise(ErrorKind::argument, "analyze_point_target: empty raster");
  }
  if (window < 8) window = 8;

  std::size_t pr = 0, pc = 0;
  double peak = -1;
  for (std::size_t i = 0; i < img.rows; ++i) {
    const std::complex<double>* row = img.row(i);
    for (std::size_t j = 0; j < img.cols; ++j) {
      const double m = std::abs(row[j]);
      if (m > peak) {
        peak = m;
        pr = i;
        pc = j;
      }
    }
  }

  const double half = static_cast<double>(window) / 2.0;
  const double dr = std::abs(static_cast<double>(pr) - static_cast<double>(expected_row));
  const double dc = std::abs(static_cast<double>(pc) - static_cast<double>(expected_col));
  if (dr > half || dc > half) {
    raise(ErrorKind::misfocus,
          "analyze_point_target: peak at (" + std::to_string(pr) + ", " +
              std::to_string(pc) + ") farther than " + std::to_string(half) +
              " cells from expected (" + std::to_string(expected_row) + ", " +
              std::to_string(expected_col) + ")");
  }

  // Cuts through the peak, clamped to the raster.
  const auto cut_bounds = [&](std::size_t center, std::size_t extent) {
    const std::size_t lo = center >= window / 2 ? center - window / 2 : 0;
    const std::size_t hi = std::min(extent, lo + window + 1);
    return std::pair<std::size_t, std::size_t>(hi >= window + 1 ? hi - (window + 1) : 0, hi);
  };
  const auto [c_lo, c_hi] = cut_bounds(pc, img.cols);
  const auto [r_lo, r_hi] = cut_bounds(pr, img.rows);

  std::vector<std::complex<double>> range_cut, az_cut;
  double mean_mag = 0;
  for (std::size_t j = c_lo; j < c_hi; ++j) {
    range_cut.push_back(img.at(pr, j));
    mean_mag += std::abs(img.at(pr, j));
  }
  for (std::size_t i = r_lo; i < r_hi; ++i) {
    az_cut.push_back(img.at(i, pc));
    mean_mag += std::abs(img.at(i, pc));
  }
  mean_mag /= static_cast<double>(range_cut.size() + az_cut.size());
  if (!(peak > 2.0 * mean_mag)) {
    raise(ErrorKind::misfocus,
          "analyze_point_target: no dominant peak (max " + std::to_string(peak) +
              " vs cut mean " + std::to_string(mean_mag) + ")");
  }

  const CutMetrics range_m = measure_cut(range_cut, 16);
  const CutMetrics az_m = measure_cut(az_cut, 16);

  IrfReport rep;
  rep.peak_row = pr;
  rep.peak_col = pc;
  rep.peak_mag = peak;
  rep.peak_phase = std::arg(img.at(pr, pc));
  rep.range_width_3db = range_m.width_3db;
  rep.az_width_3db = az_m.width_3db;
  rep.pslr_db = std::max(range_m.pslr_db, az_m.pslr_db);
  rep.islr_db = std::max(range_m.islr_db, az_m.islr_db);
  return rep;
}

double energy_concentration(const Raster& rd, std::size_t column, std::size_t halfwidth) {
  if (rd.cols == 0 || column >= rd.cols) {
    raise(ErrorKind::argument, "energy_concentration: column outside raster");
  }
  const std::size_t lo = column >= halfwidth ? column - halfwidth : 0;
  const std::size_t hi = std::min(rd.cols - 1, column + halfwidth);
  double inside = 0, total = 0;
  for (std::size_t i = 0; i < rd.rows; ++i) {
    const std::complex<double>* row = rd.row(i);
    for (std::size_t j = 0; j < rd.cols; ++j) {
      const double p = std::norm(row[j]);
      total += p;
      if (j >= lo && j <= hi) inside += p;
    }
  }
  return total > 0 ? inside / total : 0.0;
}

std::string irf_report_kv(const IrfReport& rep) {
  std::ostringstream os;
  os.precision(10);
  os << "peak_row = " << rep.peak_row << "\n"
     << "peak_col = " << rep.peak_col << "\n"
     << "peak_mag = " << rep.peak_mag << "\n"
     << "peak_phase = " << rep.peak_phase << "\n"
     << "range_width_3db = " << rep.range_width_3db << "\n"
     << "az_width_3db = " << rep.az_width_3db << "\n"
     << "pslr_db = " << rep.pslr_db << "\n"
     << "islr_db = " << rep.islr_db << "\n";
  return os.str();
}

std::string irf_csv_header() {
  return "peak_row,peak_col,peak_mag,peak_phase,range_width_3db,az_width_3db,pslr_db,"
         "islr_db";
}

std::string irf_csv_row(const IrfReport& rep) {
  std::ostringstream os;
  os.precision(10);
  os << rep.peak_row << ',' << rep.peak_col << ',' << rep.peak_mag << ',' << rep.peak_phase
     << ',' << rep.range_width_3db << ',' << rep.az_width_3db << ',' << rep.pslr_db << ','
     << rep.islr_db;
  return os.str();
}

}  // namespace sar
