#include "sar/raster.hpp"

#include <string>

#include "sar/error.hpp"

namespace sar {

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::time_time: return "time/time";
    case Domain::time_doppler: return "time/Doppler";
    case Domain::freq_doppler: return "freq/Doppler";
    case Domain::freq_freq: return "freq/freq";
    case Domain::stolt: return "stolt";
  }
  return "unknown";
}

double Raster::energy() const {
  double e = 0;
  for (const auto& x : data) e += std::norm(x);
  return e;
}

void require_domain(const Raster& r, Domain expected, const char* op) {
  if (r.domain != expected) {
    raise(ErrorKind::domain, std::string(op) + ": expected " + domain_name(expected) +
                                 " raster, got " + domain_name(r.domain));
  }
}

}  // namespace sar
