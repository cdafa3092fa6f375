#pragma once

#include <complex>
#include <vector>

namespace sar {

inline constexpr double kDefaultC = 2.99792458e8;  // propagation speed [m/s]

/// Platform and waveform constants shared by every processing stage.
struct RadarParams {
  double f_c = 0;    // carrier frequency [Hz]
  double B = 0;      // chirp bandwidth [Hz]
  double T = 0;      // chirp duration [s]
  double beta = 0;   // chirp rate [Hz/s], B/T
  double Fr = 0;     // fast-time sampling rate [Hz]
  double PRF = 0;    // pulse repetition frequency [Hz]
  double v = 0;      // platform speed [m/s]
  double c = kDefaultC;
  double R_ref = 0;  // reference slant range for the wavenumber chain [m]

  double lambda() const { return c / f_c; }

  // Throws Error(invariant) naming the offending field: all fields strictly
  // positive, beta*T == B within 1e-9 relative, Fr >= B.
  void validate() const;
};

/// RadarParams with beta derived from B/T.
RadarParams make_radar_params(double f_c, double B, double T, double Fr, double PRF,
                              double v, double R_ref, double c = kDefaultC);

struct PointTarget {
  std::complex<double> sigma{1.0, 0.0};  // complex reflection coefficient
  double r0 = 0;                         // closest-approach slant range [m]
  double eta_c = 0;                      // beam-center slow time [s]
};

struct Scene {
  std::vector<PointTarget> targets;
  double aperture_time = 0;  // synthetic-aperture dwell, support of w_a [s]

  // Requires at least one target, positive aperture, r0 > 0 and finite sigma.
  void validate() const;
};

}  // namespace sar
