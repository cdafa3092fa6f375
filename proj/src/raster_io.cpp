#include "sar/raster_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "sar/error.hpp"

namespace sar {

namespace {

static_assert(std::endian::native == std::endian::little,
              "raster files are little-endian; big-endian hosts need byte swaps");

constexpr char kMagic[8] = {'S', 'A', 'R', 'R', 'A', 'S', 'T', '1'};
constexpr std::size_t kHeaderSize = 8 + 4 + 4 + 8 * 4 + 1 + 7;
constexpr std::uint32_t kMaxDim = 1u << 26;  // allocation guard

struct Header {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  double t0 = 0, Fr = 0, eta0 = 0, PRF = 0;
  std::uint8_t domain = 0;
};

template <class T>
void put(std::string& buf, const T& value) {
  const char* p = reinterpret_cast<const char*>(&value);
  buf.append(p, sizeof(T));
}

template <class T>
T take(const char*& p) {
  T value;
  std::memcpy(&value, p, sizeof(T));
  p += sizeof(T);
  return value;
}

}  // namespace

Raster read_raster(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorKind::io, "cannot open raster file " + path.string());
  }
  in.seekg(0, std::ios::end);
  const std::uint64_t file_size = static_cast<std::uint64_t>(in.tellg());
  in.seekg(0);

  char header_bytes[kHeaderSize];
  if (file_size < kHeaderSize || !in.read(header_bytes, kHeaderSize)) {
    raise(ErrorKind::format, "raster file " + path.string() + " truncated: " +
                                 std::to_string(file_size) + " bytes, header needs " +
                                 std::to_string(kHeaderSize));
  }
  if (std::memcmp(header_bytes, kMagic, sizeof(kMagic)) != 0) {
    raise(ErrorKind::format, "raster file " + path.string() + " has a bad magic tag");
  }

  const char* p = header_bytes + sizeof(kMagic);
  Header h;
  h.rows = take<std::uint32_t>(p);
  h.cols = take<std::uint32_t>(p);
  h.t0 = take<double>(p);
  h.Fr = take<double>(p);
  h.eta0 = take<double>(p);
  h.PRF = take<double>(p);
  h.domain = take<std::uint8_t>(p);

  if (h.domain > static_cast<std::uint8_t>(Domain::stolt)) {
    raise(ErrorKind::format, "raster file " + path.string() + ": unknown domain tag " +
                                 std::to_string(h.domain));
  }
  if (h.rows == 0 || h.cols == 0 || h.rows > kMaxDim || h.cols > kMaxDim) {
    raise(ErrorKind::format, "raster file " + path.string() + ": implausible dimensions " +
                                 std::to_string(h.rows) + "x" + std::to_string(h.cols));
  }
  const std::uint64_t payload =
      static_cast<std::uint64_t>(h.rows) * static_cast<std::uint64_t>(h.cols) * 8u;
  if (file_size != kHeaderSize + payload) {
    raise(ErrorKind::format, "raster file " + path.string() + " truncated: expected " +
                                 std::to_string(kHeaderSize + payload) + " bytes, found " +
                                 std::to_string(file_size));
  }

  Raster r(h.rows, h.cols);
  r.t0 = h.t0;
  r.Fr = h.Fr;
  r.eta0 = h.eta0;
  r.PRF = h.PRF;
  r.domain = static_cast<Domain>(h.domain);
  r.time_origin = h.t0;
  r.eta_origin = h.eta0;

  std::vector<float> buf(2 * static_cast<std::size_t>(h.cols));
  for (std::size_t i = 0; i < r.rows; ++i) {
    if (!in.read(reinterpret_cast<char*>(buf.data()),
                 static_cast<std::streamsize>(buf.size() * sizeof(float)))) {
      raise(ErrorKind::io, "raster file " + path.string() + ": short read");
    }
    std::complex<double>* row = r.row(i);
    for (std::size_t j = 0; j < r.cols; ++j) {
      row[j] = {static_cast<double>(buf[2 * j]), static_cast<double>(buf[2 * j + 1])};
    }
  }
  return r;
}

void write_raster(const Raster& raster, const std::filesystem::path& path) {
  if (raster.rows == 0 || raster.cols == 0) {
    raise(ErrorKind::argument, "write_raster: empty raster");
  }
  if (raster.rows > kMaxDim || raster.cols > kMaxDim) {
    raise(ErrorKind::argument, "write_raster: dimensions exceed the format guard");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    raise(ErrorKind::io, "cannot create raster file " + path.string());
  }

  std::string header;
  header.reserve(kHeaderSize);
  header.append(kMagic, sizeof(kMagic));
  put(header, static_cast<std::uint32_t>(raster.rows));
  put(header, static_cast<std::uint32_t>(raster.cols));
  put(header, raster.t0);
  put(header, raster.Fr);
  put(header, raster.eta0);
  put(header, raster.PRF);
  put(header, static_cast<std::uint8_t>(raster.domain));
  header.append(7, '\0');
  out.write(header.data(), static_cast<std::streamsize>(header.size()));

  std::vector<float> buf(2 * raster.cols);
  for (std::size_t i = 0; i < raster.rows; ++i) {
    const std::complex<double>* row = raster.row(i);
    for (std::size_t j = 0; j < raster.cols; ++j) {
      buf[2 * j] = static_cast<float>(row[j].real());
      buf[2 * j + 1] = static_cast<float>(row[j].imag());
    }
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size() * sizeof(float)));
  }
  if (!out) {
    raise(ErrorKind::io, "write failed for raster file " + path.string());
  }
}

void render_magnitude(const Raster& raster, const std::filesystem::path& path,
                      const RenderOptions& opts) {
  if (raster.rows == 0 || raster.cols == 0) {
    raise(ErrorKind::argument, "render_magnitude: empty raster");
  }
  if (!(opts.db_floor < 0)) {
    raise(ErrorKind::argument, "render_magnitude: db_floor must be negative");
  }

  std::vector<double> mag(raster.data.size());
  for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::abs(raster.data[i]);

  double ref;
  if (opts.percentile_clip >= 100.0) {
    ref = *std::max_element(mag.begin(), mag.end());
  } else {
    std::vector<double> sorted = mag;
    const double q = std::clamp(opts.percentile_clip / 100.0, 0.0, 1.0);
    const auto idx = static_cast<std::size_t>(
        std::llround(q * static_cast<double>(sorted.size() - 1)));
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(idx),
                     sorted.end());
    ref = sorted[idx];
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    raise(ErrorKind::io, "cannot create image file " + path.string());
  }
  out << "P5\n" << raster.cols << " " << raster.rows << "\n255\n";

  std::vector<unsigned char> line(raster.cols);
  for (std::size_t i = 0; i < raster.rows; ++i) {
    for (std::size_t j = 0; j < raster.cols; ++j) {
      const double m = mag[i * raster.cols + j];
      double level = 0;
      if (ref > 0 && m > 0) {
        const double db = 20.0 * std::log10(m / ref);
        level = (db - opts.db_floor) / (0.0 - opts.db_floor);
      }
      level = std::clamp(level, 0.0, 1.0);
      line[j] = static_cast<unsigned char>(std::lround(level * 255.0));
    }
    out.write(reinterpret_cast<const char*>(line.data()),
              static_cast<std::streamsize>(line.size()));
  }
  if (!out) {
    raise(ErrorKind::io, "write failed for image file " + path.string());
  }
}

}  // namespace sar
