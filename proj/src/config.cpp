#include "sar/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "sar/error.hpp"

namespace sar {

namespace {

std::string strip(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

double parse_number(const std::string& value, const std::string& where) {
  try {
    std::size_t used = 0;
    const double x = std::stod(value, &used);
    if (used != value.size()) {
      raise(ErrorKind::format, where + ": trailing characters after number '" + value + "'");
    }
    return x;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    raise(ErrorKind::format, where + ": cannot parse number '" + value + "'");
  }
}

// key = value lines with '#' comments; returns pairs in file order.
std::vector<std::pair<std::string, std::string>> parse_kv_lines(std::string_view text,
                                                                const char* what) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string stripped = strip(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      raise(ErrorKind::format, std::string(what) + " line " + std::to_string(line_no) +
                                   ": expected key = value, got '" + stripped + "'");
    }
    entries.emplace_back(strip(stripped.substr(0, eq)), strip(stripped.substr(eq + 1)));
  }
  return entries;
}

std::string read_file(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorKind::io, std::string("cannot open ") + what + " file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

RadarParams parse_radar_params(std::string_view text) {
  std::map<std::string, double> values;
  for (const auto& [key, value] : parse_kv_lines(text, "config")) {
    static const std::map<std::string, int> known = {
        {"f_c", 0}, {"B", 0}, {"T", 0}, {"Fr", 0}, {"PRF", 0},
        {"v", 0},   {"R_ref", 0}, {"beta", 0}, {"c", 0}};
    if (!known.count(key)) {
      raise(ErrorKind::format, "config: unknown key '" + key + "'");
    }
    if (values.count(key)) {
      raise(ErrorKind::format, "config: duplicate key '" + key + "'");
    }
    values[key] = parse_number(value, "config key " + key);
  }
  for (const char* required : {"f_c", "B", "T", "Fr", "PRF", "v", "R_ref"}) {
    if (!values.count(required)) {
      raise(ErrorKind::format, std::string("config: missing key '") + required + "'");
    }
  }

  RadarParams p;
  p.f_c = values["f_c"];
  p.B = values["B"];
  p.T = values["T"];
  p.Fr = values["Fr"];
  p.PRF = values["PRF"];
  p.v = values["v"];
  p.R_ref = values["R_ref"];
  if (values.count("c")) p.c = values["c"];
  p.beta = values.count("beta") ? values["beta"] : p.B / p.T;
  p.validate();
  return p;
}

RadarParams load_radar_params(const std::filesystem::path& path) {
  return parse_radar_params(read_file(path, "config"));
}

Scene parse_scene(std::string_view text, double aperture_time) {
  Scene scene;
  scene.aperture_time = aperture_time;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string stripped = strip(line);
    if (stripped.empty()) continue;
    std::istringstream fields(stripped);
    double re = 0, im = 0, r0 = 0, eta_c = 0;
    if (!(fields >> re >> im >> r0 >> eta_c)) {
      raise(ErrorKind::format, "scene line " + std::to_string(line_no) +
                                   ": expected 'sigma_re sigma_im r0 eta_c'");
    }
    std::string rest;
    if (fields >> rest) {
      raise(ErrorKind::format,
            "scene line " + std::to_string(line_no) + ": trailing field '" + rest + "'");
    }
    scene.targets.push_back({{re, im}, r0, eta_c});
  }
  scene.validate();
  return scene;
}

Scene load_scene(const std::filesystem::path& path, double aperture_time) {
  return parse_scene(read_file(path, "scene"), aperture_time);
}

std::string format_doppler_estimate(const DopplerEstimate& est) {
  std::ostringstream os;
  os.precision(12);
  os << "method = " << est.method << "\n"
     << "f_dc_frac = " << est.f_dc_frac << "\n"
     << "M = " << est.M << "\n"
     << "f_dc = " << est.f_dc << "\n"
     << "prf = " << est.prf << "\n";
  if (!est.warning.empty()) os << "warning = " << est.warning << "\n";
  return os.str();
}

DopplerEstimate parse_doppler_estimate(std::string_view text) {
  DopplerEstimate est;
  bool saw_frac = false, saw_m = false, saw_fdc = false;
  for (const auto& [key, value] : parse_kv_lines(text, "estimate")) {
    if (key == "method") {
      est.method = value;
    } else if (key == "warning") {
      est.warning = value;
    } else if (key == "f_dc_frac") {
      est.f_dc_frac = parse_number(value, "estimate f_dc_frac");
      saw_frac = true;
    } else if (key == "M") {
      est.M = static_cast<long long>(parse_number(value, "estimate M"));
      saw_m = true;
    } else if (key == "f_dc") {
      est.f_dc = parse_number(value, "estimate f_dc");
      saw_fdc = true;
    } else if (key == "prf") {
      est.prf = parse_number(value, "estimate prf");
    } else {
      raise(ErrorKind::format, "estimate: unknown key '" + key + "'");
    }
  }
  if (!saw_frac || !saw_m || !saw_fdc) {
    raise(ErrorKind::format, "estimate: missing f_dc_frac, M or f_dc");
  }
  return est;
}

}  // namespace sar
