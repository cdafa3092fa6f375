#include "sar/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "sar/parallel.hpp"

namespace sar {

namespace {

// Plans are created once per (length, direction) on a scratch buffer with
// FFTW_UNALIGNED so they can be re-executed in-place on any array. Plan
// creation is serialized; execution through fftw_execute_dft is thread-safe.
fftw_plan plan_for(std::size_t n, int sign) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::complex<double>> scratch(n);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(key, plan);
  return plan;
}

void execute_inplace(fftw_plan plan, std::complex<double>* data) {
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, buf, buf);
}

}  // namespace

void fft_rows(Raster& r, bool forward) {
  if (r.rows == 0 || r.cols == 0) return;
  fftw_plan plan = plan_for(r.cols, forward ? FFTW_FORWARD : FFTW_BACKWARD);
  const double scale = forward ? 1.0 : 1.0 / static_cast<double>(r.cols);
  parallel_for(r.rows, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::complex<double>* row = r.row(i);
      execute_inplace(plan, row);
      if (!forward) {
        for (std::size_t j = 0; j < r.cols; ++j) row[j] *= scale;
      }
    }
  });
}

void fft_cols(Raster& r, bool forward) {
  if (r.rows == 0 || r.cols == 0) return;
  fftw_plan plan = plan_for(r.rows, forward ? FFTW_FORWARD : FFTW_BACKWARD);
  const double scale = forward ? 1.0 : 1.0 / static_cast<double>(r.rows);
  parallel_for(r.cols, [&](std::size_t begin, std::size_t end) {
    std::vector<std::complex<double>> col(r.rows);
    for (std::size_t j = begin; j < end; ++j) {
      for (std::size_t i = 0; i < r.rows; ++i) col[i] = r.at(i, j);
      execute_inplace(plan, col.data());
      if (forward) {
        for (std::size_t i = 0; i < r.rows; ++i) r.at(i, j) = col[i];
      } else {
        for (std::size_t i = 0; i < r.rows; ++i) r.at(i, j) = col[i] * scale;
      }
    }
  });
}

double dft_bin_freq(std::size_t k, std::size_t n, double rate) {
  const double half = static_cast<double>(n) / 2.0;
  double idx = static_cast<double>(k);
  if (idx >= half) idx -= static_cast<double>(n);
  return idx * rate / static_cast<double>(n);
}

long long centered_first_bin(std::size_t n, double step, double center) {
  const double lo = center / step - static_cast<double>(n) / 2.0;
  return static_cast<long long>(std::ceil(lo - 1e-9));
}

namespace {

std::size_t wrap_index(long long k0, std::size_t n) {
  long long m = k0 % static_cast<long long>(n);
  if (m < 0) m += static_cast<long long>(n);
  return static_cast<std::size_t>(m);
}

}  // namespace

void rows_from_dft_order(Raster& r, long long k0) {
  const std::size_t s = wrap_index(k0, r.rows);
  if (s == 0) return;
  std::rotate(r.data.begin(), r.data.begin() + static_cast<std::ptrdiff_t>(s * r.cols),
              r.data.end());
}

void rows_to_dft_order(Raster& r, long long k0) {
  const std::size_t s = wrap_index(k0, r.rows);
  if (s == 0) return;
  std::rotate(r.data.begin(),
              r.data.begin() + static_cast<std::ptrdiff_t>((r.rows - s) * r.cols),
              r.data.end());
}

void cols_from_dft_order(Raster& r, long long k0) {
  const std::size_t s = wrap_index(k0, r.cols);
  if (s == 0) return;
  parallel_for(r.rows, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::complex<double>* row = r.row(i);
      std::rotate(row, row + s, row + r.cols);
    }
  });
}

void cols_to_dft_order(Raster& r, long long k0) {
  const std::size_t s = wrap_index(k0, r.cols);
  if (s == 0) return;
  parallel_for(r.rows, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::complex<double>* row = r.row(i);
      std::rotate(row, row + (r.cols - s), row + r.cols);
    }
  });
}

}  // namespace sar
