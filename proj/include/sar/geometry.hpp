#pragma once

#include "sar/params.hpp"

namespace sar {

/// Slant range R(eta) = sqrt(r0^2 + (v*eta)^2) for a target with closest
/// approach at eta = 0.
double slant_range(const PointTarget& target, double v, double eta);

struct FmRates {
  double f_r;  // slow-time FM rate of the range history, v^2 r0^2 / R^3(eta_c) [m/s^2]
  double k_a;  // azimuth FM rate 2 v^2 / (lambda r0) [Hz/s]
};

// Both rates are exposed because the range-history rate f_r carries units of
// m/s^2 while the Doppler-domain rate is (2/lambda) f_r; at eta_c = 0 these
// obey (2/lambda) f_r == k_a.
FmRates fm_rates(const RadarParams& params, double r0, double eta_c);

/// Range resolution c / (2B).
double range_resolution(const RadarParams& params);

// Doppler centroid from a range rate: -(2/lambda) dR/deta. A receding target
// (positive range rate) yields a negative centroid, matching the sign of the
// instantaneous frequency of the echo phase -4 pi f_c R(eta) / c.
double dc_from_range_rate(const RadarParams& params, double range_rate);

}  // namespace sar
