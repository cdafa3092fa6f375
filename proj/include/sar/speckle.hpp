#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sar/raster.hpp"

namespace sar {

struct FilterSpec {
  std::size_t rows = 3;  // m
  std::size_t cols = 3;  // n
  // Edge policy: replicate (the only policy).
};

// Minimizer of sum |a_i - a|: the median for odd counts, the lower of the two
// middle order statistics for even counts (any point between them minimizes;
// the lower one is returned for determinism).
double l1_minimizer(std::span<const double> values);

// Sliding m x n L1 minimizer over a real image. The window is anchored at its
// (floor((m-1)/2), floor((n-1)/2)) element, edges replicate, and the output
// has the input dimensions. Windows deeper than one full edge reflection
// (m > 2*rows or n > 2*cols) are rejected.
std::vector<double> median_despeckle(const std::vector<double>& img, std::size_t rows,
                                     std::size_t cols, const FilterSpec& spec);

/// Magnitude image of a raster (row-major, rows x cols).
std::vector<double> magnitude_image(const Raster& r);

// Despeckles the raster's magnitude; the result carries the filtered values in
// the real part with zero imaginary part and unchanged axis metadata.
Raster despeckle_raster(const Raster& r, const FilterSpec& spec);

}  // namespace sar
