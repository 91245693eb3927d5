#pragma once

#include <filesystem>
#include <string>

#include "fortcalc/analysis.hpp"
#include "fortcalc/units_params.hpp"

namespace fortcalc {

// A complete run description, from a preset or a JSON config file.
//
// JSON keys (all others are rejected):
//   gamma_rad_s, omega0_rad_s, omegaL_rad_s, rabi_peak_over_gamma  (required)
//   waist_m, l, p, phi_rad, theta0_rad,
//   include_term1, include_term2, include_term3,
//   grid { r_max_over_w0, n_points }
struct RunConfig {
  std::string label;
  PhysicalParams params;
  BeamProfile beam;  // SI
  PhaseConfig phase;
  TermToggles toggles;
  GridSpec grid;
};

RunConfig config_from_preset(const std::string& name,
                             GammaConvention convention =
                                 GammaConvention::kOrdinary);
RunConfig parse_config_json(const std::string& text,
                            const std::string& label = "config");
RunConfig load_config_json(const std::filesystem::path& path);

std::string config_to_json(const RunConfig& config);

void validate(const GridSpec& grid);

}  // namespace fortcalc
