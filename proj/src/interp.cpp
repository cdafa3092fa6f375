#include "sar/interp.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sar/error.hpp"

namespace sar {

double kaiser_i0(double x) {
  // Abramowitz & Stegun 9.8.1/9.8.2 rational approximations.
  const double ax = std::abs(x);
  if (ax < 3.75) {
    const double t = (x / 3.75) * (x / 3.75);
    return 1.0 +
           t * (3.5156229 +
                t * (3.0899424 +
                     t * (1.2067492 + t * (0.2659732 + t * (0.0360768 + t * 0.0045813)))));
  }
  const double t = 3.75 / ax;
  const double poly =
      0.39894228 +
      t * (0.01328592 +
           t * (0.00225319 +
                t * (-0.00157565 +
                     t * (0.00916281 +
                          t * (-0.02057706 +
                               t * (0.02635537 + t * (-0.01647633 + t * 0.00392377)))))));
  return std::exp(ax) / std::sqrt(ax) * poly;
}

namespace {

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

}  // namespace

SincInterp::SincInterp(int taps, double kaiser_beta) : taps_(taps), beta_(kaiser_beta) {
  if (taps != 4 && taps != 8 && taps != 16) {
    raise(ErrorKind::argument, "interpolation kernel length must be 4, 8 or 16, got " +
                                   std::to_string(taps));
  }
  inv_i0_beta_ = 1.0 / kaiser_i0(beta_);
}

std::complex<double> SincInterp::at(std::span<const std::complex<double>> src, double pos,
                                    EdgePolicy edge) const {
  const long long n = static_cast<long long>(src.size());
  if (n == 0) return {};
  if (edge == EdgePolicy::zero && (pos < -0.5 || pos > static_cast<double>(n) - 0.5)) {
    return {};
  }
  const long long i0 = static_cast<long long>(std::floor(pos));
  // Integer positions reproduce the source sample exactly; evaluating the
  // kernel there would leak sin(pi k) rounding residue into the neighbors.
  const long long nearest = std::llround(pos);
  if (std::abs(pos - static_cast<double>(nearest)) < 1e-9) {
    long long j = nearest;
    if (j < 0 || j >= n) {
      if (edge == EdgePolicy::zero) return {};
      j = j < 0 ? 0 : n - 1;
    }
    return src[static_cast<std::size_t>(j)];
  }
  const int half = taps_ / 2;
  const double half_width = static_cast<double>(taps_) / 2.0;

  // weight_sum covers the whole kernel window; out-of-support taps contribute
  // no data but keep their weight, so zero-policy edges roll off while the
  // in-support gain stays flat.
  std::complex<double> acc{};
  double weight_sum = 0;
  for (int k = -half + 1; k <= half; ++k) {
    const long long idx = i0 + k;
    const double u = pos - static_cast<double>(idx);
    const double frac = u / half_width;
    if (std::abs(frac) >= 1.0) continue;
    const double w =
        sinc(u) * kaiser_i0(beta_ * std::sqrt(1.0 - frac * frac)) * inv_i0_beta_;
    weight_sum += w;
    long long j = idx;
    if (j < 0 || j >= n) {
      if (edge == EdgePolicy::zero) continue;
      j = j < 0 ? 0 : n - 1;
    }
    acc += w * src[static_cast<std::size_t>(j)];
  }
  if (weight_sum != 0.0) acc /= weight_sum;
  return acc;
}

}  // namespace sar
