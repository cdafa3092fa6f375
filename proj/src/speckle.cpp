#include "sar/speckle.hpp"

#include <algorithm>
#include <string>

#include "sar/error.hpp"
#include "sar/parallel.hpp"

namespace sar {

double l1_minimizer(std::span<const double> values) {
  if (values.empty()) {
    raise(ErrorKind::argument, "l1_minimizer: empty input");
  }
  std::vector<double> work(values.begin(), values.end());
  const std::size_t k = (work.size() - 1) / 2;  // lower middle for even counts
  std::nth_element(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(k), work.end());
  return work[k];
}

std::vector<double> median_despeckle(const std::vector<double>& img, std::size_t rows,
                                     std::size_t cols, const FilterSpec& spec) {
  if (rows == 0 || cols == 0 || img.size() != rows * cols) {
    raise(ErrorKind::argument, "median_despeckle: empty or inconsistent image");
  }
  if (spec.rows == 0 || spec.cols == 0) {
    raise(ErrorKind::invariant, "median_despeckle: window dimensions must be >= 1");
  }
  if (spec.rows > 2 * rows || spec.cols > 2 * cols) {
    raise(ErrorKind::argument,
          "median_despeckle: " + std::to_string(spec.rows) + "x" +
              std::to_string(spec.cols) + " window larger than the replicate-padded " +
              std::to_string(rows) + "x" + std::to_string(cols) + " image");
  }

  const long long anchor_r = static_cast<long long>((spec.rows - 1) / 2);
  const long long anchor_c = static_cast<long long>((spec.cols - 1) / 2);
  const std::size_t k = (spec.rows * spec.cols - 1) / 2;

  std::vector<double> out(img.size());
  parallel_for(rows, [&](std::size_t begin, std::size_t end) {
    std::vector<double> window(spec.rows * spec.cols);
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::size_t w = 0;
        for (std::size_t wi = 0; wi < spec.rows; ++wi) {
          long long r = static_cast<long long>(i) - anchor_r + static_cast<long long>(wi);
          r = std::clamp<long long>(r, 0, static_cast<long long>(rows) - 1);
          const double* src = img.data() + static_cast<std::size_t>(r) * cols;
          for (std::size_t wj = 0; wj < spec.cols; ++wj) {
            long long c = static_cast<long long>(j) - anchor_c + static_cast<long long>(wj);
            c = std::clamp<long long>(c, 0, static_cast<long long>(cols) - 1);
            window[w++] = src[static_cast<std::size_t>(c)];
          }
        }
        std::nth_element(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(k),
                         window.end());
        out[i * cols + j] = window[k];
      }
    }
  });
  return out;
}

std::vector<double> magnitude_image(const Raster& r) {
  std::vector<double> img(r.data.size());
  for (std::size_t i = 0; i < r.data.size(); ++i) img[i] = std::abs(r.data[i]);
  return img;
}

Raster despeckle_raster(const Raster& r, const FilterSpec& spec) {
  const std::vector<double> filtered =
      median_despeckle(magnitude_image(r), r.rows, r.cols, spec);
  Raster out = r;
  for (std::size_t i = 0; i < filtered.size(); ++i) out.data[i] = filtered[i];
  return out;
}

}  // namespace sar
