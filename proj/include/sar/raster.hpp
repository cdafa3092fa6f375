#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sar {

// Axis state of a Raster. Every operation checks its input tag and stamps the
// output, so the tag always reflects the last transform applied.
enum class Domain : std::uint8_t {
  time_time = 0,     // slow time x fast time (raw / focused image)
  time_doppler = 1,  // Doppler rows x fast-time columns (range-Doppler)
  freq_doppler = 2,  // Doppler rows x fast-frequency columns
  freq_freq = 3,     // Doppler rows x fast-frequency columns, both centered
  stolt = 4,         // Doppler rows x resampled fast-frequency columns
};

const char* domain_name(Domain d);

// Complex 2-D signal matrix, row-major; rows are slow time (azimuth), columns
// fast time (range). In spectral domains eta0/t0 hold the first bin's
// frequency instead of a time; time_origin/eta_origin keep the underlying
// time-grid origins so inverse transforms can restore them.
struct Raster {
  std::size_t rows = 0;
  std::size_t cols = 0;
  double t0 = 0;    // fast time of column 0 [s], or first fast-frequency bin [Hz]
  double Fr = 0;    // fast-time sample rate [Hz]
  double eta0 = 0;  // slow time of row 0 [s], or first Doppler bin [Hz]
  double PRF = 0;   // slow-time sample rate [Hz]
  Domain domain = Domain::time_time;
  double time_origin = 0;
  double eta_origin = 0;
  std::vector<std::complex<double>> data;

  Raster() = default;
  Raster(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  std::complex<double>& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const std::complex<double>& at(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
  std::complex<double>* row(std::size_t r) { return data.data() + r * cols; }
  const std::complex<double>* row(std::size_t r) const { return data.data() + r * cols; }

  double fast_time(std::size_t col) const { return t0 + static_cast<double>(col) / Fr; }
  double slow_time(std::size_t row) const { return eta0 + static_cast<double>(row) / PRF; }
  double fast_freq_step() const { return Fr / static_cast<double>(cols); }
  double doppler_step() const { return PRF / static_cast<double>(rows); }
  double fast_freq(std::size_t col) const {
    return t0 + static_cast<double>(col) * fast_freq_step();
  }
  double doppler(std::size_t row) const {
    return eta0 + static_cast<double>(row) * doppler_step();
  }

  double energy() const;  // sum of |x|^2
};

// Throws Error(domain) when the raster is not in the expected domain.
void require_domain(const Raster& r, Domain expected, const char* op);

}  // namespace sar
