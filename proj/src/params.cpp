#include "sar/params.hpp"

#include <cmath>
#include <string>

#include "sar/error.hpp"

namespace sar {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0) || !std::isfinite(value)) {
    raise(ErrorKind::invariant, std::string(name) + " must be strictly positive, got " +
                                    std::to_string(value));
  }
}

}  // namespace

void RadarParams::validate() const {
  require_positive(f_c, "f_c");
  require_positive(B, "B");
  require_positive(T, "T");
  require_positive(beta, "beta");
  require_positive(Fr, "Fr");
  require_positive(PRF, "PRF");
  require_positive(v, "v");
  require_positive(c, "c");
  require_positive(R_ref, "R_ref");
  if (std::abs(beta * T - B) > 1e-9 * B) {
    raise(ErrorKind::invariant,
          "beta: beta*T = " + std::to_string(beta * T) + " does not match B = " +
              std::to_string(B) + " within 1e-9 relative");
  }
  if (Fr < B) {
    raise(ErrorKind::invariant, "Fr: sampling rate " + std::to_string(Fr) +
                                    " is below the chirp bandwidth " + std::to_string(B));
  }
}

RadarParams make_radar_params(double f_c, double B, double T, double Fr, double PRF,
                              double v, double R_ref, double c) {
  RadarParams p;
  p.f_c = f_c;
  p.B = B;
  p.T = T;
  p.beta = B / T;
  p.Fr = Fr;
  p.PRF = PRF;
  p.v = v;
  p.R_ref = R_ref;
  p.c = c;
  p.validate();
  return p;
}

void Scene::validate() const {
  if (targets.empty()) {
    raise(ErrorKind::invariant, "scene: at least one target required");
  }
  if (!(aperture_time > 0)) {
    raise(ErrorKind::invariant, "aperture_time must be strictly positive");
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const PointTarget& t = targets[i];
    if (!(t.r0 > 0)) {
      raise(ErrorKind::invariant,
            "target " + std::to_string(i) + ": r0 must be strictly positive");
    }
    if (!std::isfinite(t.sigma.real()) || !std::isfinite(t.sigma.imag()) ||
        !std::isfinite(t.eta_c)) {
      raise(ErrorKind::invariant, "target " + std::to_string(i) + ": non-finite field");
    }
  }
}

}  // namespace sar
