#pragma once

#include <filesystem>

#include "sar/raster.hpp"

namespace sar {

// Binary raster file, little-endian:
//   magic "SARRAST1" (8 bytes)
//   u32 rows, u32 cols, f64 t0, f64 Fr, f64 eta0, f64 PRF, u8 domain, 7 pad bytes
//   payload: rows*cols interleaved (re, im) IEEE-754 binary32, row-major
// write(read(f)) is bit-identical to f. Header sanity (magic, domain tag,
// payload size) is checked before any allocation.
Raster read_raster(const std::filesystem::path& path);
void write_raster(const Raster& raster, const std::filesystem::path& path);

struct RenderOptions {
  double db_floor = -40.0;        // black level, dB below the reference peak
  double percentile_clip = 100.0;  // magnitude percentile used as the 0 dB reference
};

// 8-bit P5 graymap of 20 log10 |x|: the reference percentile maps to 255, the
// floor and below to 0, linear in dB between.
void render_magnitude(const Raster& raster, const std::filesystem::path& path,
                      const RenderOptions& opts = {});

}  // namespace sar
