#include "sar/geometry.hpp"

#include <cmath>

namespace sar {

double slant_range(const PointTarget& target, double v, double eta) {
  return std::hypot(target.r0, v * eta);
}

FmRates fm_rates(const RadarParams& params, double r0, double eta_c) {
  const double r_eta = std::hypot(r0, params.v * eta_c);
  FmRates rates;
  rates.f_r = params.v * params.v * r0 * r0 / (r_eta * r_eta * r_eta);
  rates.k_a = 2.0 * params.v * params.v / (params.lambda() * r0);
  return rates;
}

double range_resolution(const RadarParams& params) { return params.c / (2.0 * params.B); }

double dc_from_range_rate(const RadarParams& params, double range_rate) {
  return -2.0 / params.lambda() * range_rate;
}

}  // namespace sar
