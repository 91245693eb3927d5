#include "fortcalc/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fortcalc/errors.hpp"

namespace fortcalc {
namespace {

using nlohmann::json;

const std::set<std::string>& top_level_keys() {
  static const std::set<std::string> keys = {
      "gamma_rad_s",   "omega0_rad_s",  "omegaL_rad_s",  "rabi_peak_over_gamma",
      "waist_m",       "l",             "p",             "phi_rad",
      "theta0_rad",    "include_term1", "include_term2", "include_term3",
      "grid"};
  return keys;
}

double get_number(const json& obj, const char* key, double fallback,
                  bool required) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) {
      throw ValidationError(std::string("config: missing required key '") +
                            key + "'");
    }
    return fallback;
  }
  if (!it->is_number()) {
    throw ValidationError(std::string("config: '") + key +
                          "' must be a number");
  }
  return it->get<double>();
}

int get_int(const json& obj, const char* key, int fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) {
    throw ValidationError(std::string("config: '") + key +
                          "' must be an integer");
  }
  return it->get<int>();
}

bool get_bool(const json& obj, const char* key, bool fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) {
    throw ValidationError(std::string("config: '") + key +
                          "' must be true or false");
  }
  return it->get<bool>();
}

}  // namespace

void validate(const GridSpec& grid) {
  if (!std::isfinite(grid.r_max) || grid.r_max <= 0.0) {
    throw ValidationError("grid r_max must be finite and > 0");
  }
  if (grid.n_points < 16) {
    throw ValidationError("grid n_points must be >= 16");
  }
}

RunConfig config_from_preset(const std::string& name,
                             GammaConvention convention) {
  const Preset preset = load_preset(name, convention);
  RunConfig config;
  config.label = preset.name;
  config.params = preset.params;
  config.beam = preset.beam;
  config.phase = preset.phase;
  return config;
}

RunConfig parse_config_json(const std::string& text, const std::string& label) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ValidationError("config: top level must be a JSON object");
  }
  for (const auto& [key, value] : root.items()) {
    if (!top_level_keys().contains(key)) {
      throw ValidationError("config: unknown key '" + key + "'");
    }
  }

  RunConfig config;
  config.label = label;
  const double gamma = get_number(root, "gamma_rad_s", 0.0, true);
  config.params = derive_params(get_number(root, "omega0_rad_s", 0.0, true),
                                get_number(root, "omegaL_rad_s", 0.0, true),
                                gamma);
  config.beam.l = get_int(root, "l", 0);
  config.beam.p = get_int(root, "p", 0);
  config.beam.waist = get_number(root, "waist_m", 1.0, false);
  config.beam.rabi_peak =
      get_number(root, "rabi_peak_over_gamma", 0.0, true) * gamma;
  validate(config.beam);
  config.phase.phi = get_number(root, "phi_rad", 0.0, false);
  config.phase.theta0 = get_number(root, "theta0_rad", 0.0, false);
  config.toggles.term1 = get_bool(root, "include_term1", true);
  config.toggles.term2 = get_bool(root, "include_term2", true);
  config.toggles.term3 = get_bool(root, "include_term3", true);

  if (const auto it = root.find("grid"); it != root.end()) {
    if (!it->is_object()) throw ValidationError("config: 'grid' must be an object");
    for (const auto& [key, value] : it->items()) {
      if (key != "r_max_over_w0" && key != "n_points") {
        throw ValidationError("config: unknown key 'grid." + key + "'");
      }
    }
    config.grid.r_max = get_number(*it, "r_max_over_w0", config.grid.r_max, false);
    config.grid.n_points = get_int(*it, "n_points", config.grid.n_points);
  }
  validate(config.grid);
  return config;
}

RunConfig load_config_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("config: cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_json(buffer.str(), path.string());
}

std::string config_to_json(const RunConfig& config) {
  json root = {
      {"gamma_rad_s", config.params.gamma},
      {"omega0_rad_s", config.params.omega0},
      {"omegaL_rad_s", config.params.omegaL},
      {"rabi_peak_over_gamma", config.beam.rabi_peak / config.params.gamma},
      {"waist_m", config.beam.waist},
      {"l", config.beam.l},
      {"p", config.beam.p},
      {"phi_rad", config.phase.phi},
      {"theta0_rad", config.phase.theta0},
      {"include_term1", config.toggles.term1},
      {"include_term2", config.toggles.term2},
      {"include_term3", config.toggles.term3},
      {"grid",
       {{"r_max_over_w0", config.grid.r_max},
        {"n_points", config.grid.n_points}}}};
  return root.dump(2) + "\n";
}

}  // namespace fortcalc
