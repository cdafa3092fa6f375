#pragma once

#include <complex>
#include <span>

namespace sar {

enum class EdgePolicy {
  replicate,  // clamp to the first/last sample
  zero,       // out-of-support positions contribute zero
};

// Kaiser-windowed sinc interpolator. Weights are normalized to unit sum so a
// purely fractional shift leaves the passband gain flat; integer positions
// reproduce the source sample exactly.
class SincInterp {
 public:
  explicit SincInterp(int taps = 8, double kaiser_beta = 5.0);

  std::complex<double> at(std::span<const std::complex<double>> src, double pos,
                          EdgePolicy edge) const;

  int taps() const { return taps_; }

 private:
  int taps_;
  double beta_;
  double inv_i0_beta_;
};

/// Modified Bessel function I0, used for the Kaiser window.
double kaiser_i0(double x);

}  // namespace sar
