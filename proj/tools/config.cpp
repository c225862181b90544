#include "config.hpp"

#include "shearcst/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace shearcst::cli {

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

double number(const std::string& key, const std::string& value) {
  try {
    return io::parse_double(value);
  } catch (const Error&) {
    throw Error(ErrorCode::ConfigInvalid, "key '" + key + "' expects a number, got '" + value + "'");
  }
}

std::size_t count(const std::string& key, const std::string& value) {
  const double v = number(key, value);
  if (!(v >= 0.0) || v != std::floor(v)) throw Error(ErrorCode::ConfigInvalid, "key '" + key + "' expects a count");
  return static_cast<std::size_t>(v);
}

}  // namespace

UniformGrid RunConfig::grid2() const {
  const double origin = x2_center - x2_step * static_cast<double>(x2_count / 2);
  return {origin, x2_step, x2_count};
}

void RunConfig::validate() const {
  try {
    params.validate();
    fiducial.validate(params);
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigInvalid, e.what());
  }
  if (grid_n < 2) throw Error(ErrorCode::ConfigInvalid, "grid.n must be at least 2");
  if (!(grid_step > 0.0)) throw Error(ErrorCode::ConfigInvalid, "grid.step must be positive");
  if (x2_count < 1) throw Error(ErrorCode::ConfigInvalid, "grid.x2_count must be at least 1");
  if (!(x2_step > 0.0)) throw Error(ErrorCode::ConfigInvalid, "grid.x2_step must be positive");
  if (!(state_q > 0.0)) throw Error(ErrorCode::ConfigInvalid, "state.q must be positive");
  if (seed_kind != "gaussian" && seed_kind != "polynomial")
    throw Error(ErrorCode::ConfigInvalid, "seed.kind must be gaussian or polynomial");
  if (!(seed_alpha > 0.0)) throw Error(ErrorCode::ConfigInvalid, "seed.alpha must be positive");
  if (seed_coefficients.empty()) throw Error(ErrorCode::ConfigInvalid, "seed.coefficients is empty");
  if (times.empty()) throw Error(ErrorCode::ConfigInvalid, "t list is empty");
  if (j_max < 0) throw Error(ErrorCode::ConfigInvalid, "spectrum.j_max must be non-negative");
  if (!(geometry_R > 0.0 && geometry_R < 1.0)) throw Error(ErrorCode::ConfigInvalid, "geometry.R must lie in (0, 1)");
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::ConfigInvalid, "line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw Error(ErrorCode::ConfigInvalid, "line " + std::to_string(lineno) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "hbar4",          "h2",           "m",           "omega",          "fiducial.kind",      "fiducial.E",
      "fiducial.a",     "fiducial.normalization",      "state.q",        "grid.n",             "grid.step",
      "grid.x2_count",  "grid.x2_step", "grid.x2_center", "scenario",     "seed.kind",          "seed.alpha",
      "seed.coefficients", "t",         "spectrum.j_max", "geometry.E",   "geometry.R",         "rng_seed",
      "out",            "format"};
  return keys;
}

std::map<std::string, std::string> environment_overrides() {
  std::map<std::string, std::string> out;
  for (const auto& key : config_keys()) {
    std::string env = "SHEARCST_";
    for (char c : key) env += c == '.' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (const char* v = std::getenv(env.c_str())) out[key] = v;
  }
  return out;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(number("list", item));
  }
  return out;
}

void apply(RunConfig& c, const std::map<std::string, std::string>& values) {
  for (const auto& [key, value] : values) {
    if (key == "hbar4") c.params.hbar4 = number(key, value);
    else if (key == "h2") c.params.h2 = number(key, value);
    else if (key == "m") c.params.m = number(key, value);
    else if (key == "omega") c.params.omega = number(key, value);
    else if (key == "fiducial.kind") {
      if (value == "gaussian") c.fiducial.kind = FiducialKind::gaussian;
      else if (value == "generic") c.fiducial.kind = FiducialKind::generic;
      else throw Error(ErrorCode::ConfigInvalid, "fiducial.kind must be gaussian or generic");
    } else if (key == "fiducial.E") c.fiducial.E = number(key, value);
    else if (key == "fiducial.a") c.fiducial.a = number(key, value);
    else if (key == "fiducial.normalization") {
      if (value == "dimensionless") c.fiducial.normalization = Measure::dimensionless;
      else if (value == "lebesgue") c.fiducial.normalization = Measure::lebesgue;
      else throw Error(ErrorCode::ConfigInvalid, "fiducial.normalization must be dimensionless or lebesgue");
    } else if (key == "state.q") c.state_q = number(key, value);
    else if (key == "grid.n") c.grid_n = count(key, value);
    else if (key == "grid.step") c.grid_step = number(key, value);
    else if (key == "grid.x2_count") c.x2_count = count(key, value);
    else if (key == "grid.x2_step") c.x2_step = number(key, value);
    else if (key == "grid.x2_center") c.x2_center = number(key, value);
    else if (key == "scenario") {
      if (value == "G") c.scenario = Scenario::G;
      else if (value == "heisenberg") c.scenario = Scenario::heisenberg;
      else throw Error(ErrorCode::ConfigInvalid, "scenario must be G or heisenberg");
    } else if (key == "seed.kind") c.seed_kind = value;
    else if (key == "seed.alpha") c.seed_alpha = number(key, value);
    else if (key == "seed.coefficients") c.seed_coefficients = parse_list(value);
    else if (key == "t") c.times = parse_list(value);
    else if (key == "spectrum.j_max") c.j_max = static_cast<int>(count(key, value));
    else if (key == "geometry.E") c.geometry_E = parse_list(value);
    else if (key == "geometry.R") c.geometry_R = number(key, value);
    else if (key == "rng_seed") c.rng_seed = count(key, value);
    else if (key == "out") c.out = value;
    else if (key == "format") c.format = io::parse_format(value);
    else throw Error(ErrorCode::ConfigInvalid, "unknown config key '" + key + "'");
  }
}

}  // namespace shearcst::cli
