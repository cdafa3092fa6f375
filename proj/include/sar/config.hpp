#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sar/doppler.hpp"
#include "sar/params.hpp"

namespace sar {

// key = value radar configuration, '#' comments. Keys: f_c, B, T, Fr, PRF, v,
// R_ref (required); beta, c (optional, beta defaults to B/T). Unknown or
// duplicate keys and invariant violations report the offending key.
RadarParams parse_radar_params(std::string_view text);
RadarParams load_radar_params(const std::filesystem::path& path);

// Scene file: one target per line "sigma_re sigma_im r0 eta_c", '#' comments.
// The aperture time is supplied by the caller.
Scene parse_scene(std::string_view text, double aperture_time);
Scene load_scene(const std::filesystem::path& path, double aperture_time);

// Doppler estimates as key = value blocks (method, f_dc_frac, M, f_dc, prf,
// optional warning).
std::string format_doppler_estimate(const DopplerEstimate& est);
DopplerEstimate parse_doppler_estimate(std::string_view text);

}  // namespace sar
