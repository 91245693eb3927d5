#include "fortcalc/units_params.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "fortcalc/errors.hpp"

namespace fortcalc {
namespace {

void require_positive(double value, const char* field) {
  if (!std::isfinite(value) || value <= 0.0) {
    std::ostringstream msg;
    msg << field << " must be finite and > 0 (got " << value << ")";
    throw ValidationError(msg.str());
  }
}

}  // namespace

PhysicalParams derive_params(double omega0, double omegaL, double gamma) {
  require_positive(omega0, "omega0");
  require_positive(omegaL, "omegaL");
  require_positive(gamma, "gamma");
  PhysicalParams params;
  params.gamma = gamma;
  params.omega0 = omega0;
  params.omegaL = omegaL;
  params.detuning = omega0 - omegaL;
  params.zsum = omega0 + omegaL;
  return params;
}

InternalParams to_internal(const PhysicalParams& params,
                           const BeamProfile& beam) {
  require_positive(params.gamma, "gamma");
  validate(beam);
  const double g = params.gamma;
  InternalParams internal;
  internal.gamma = 1.0;
  internal.omega0 = params.omega0 / g;
  internal.omegaL = params.omegaL / g;
  internal.detuning = params.detuning / g;
  internal.zsum = params.zsum / g;
  internal.gamma_rad_s = g;
  internal.waist_m = beam.waist;
  internal.beam = beam;
  internal.beam.waist = 1.0;
  internal.beam.rabi_peak = beam.rabi_peak / g;
  return internal;
}

std::pair<PhysicalParams, BeamProfile> to_physical(
    const InternalParams& internal) {
  const double g = internal.gamma_rad_s;
  PhysicalParams params;
  params.gamma = internal.gamma * g;
  params.omega0 = internal.omega0 * g;
  params.omegaL = internal.omegaL * g;
  params.detuning = internal.detuning * g;
  params.zsum = internal.zsum * g;
  BeamProfile beam = internal.beam;
  beam.waist = internal.beam.waist * internal.waist_m;
  beam.rabi_peak = internal.beam.rabi_peak * g;
  return {params, beam};
}

InternalParams desk_params(double detuning, double zsum, double rabi_peak,
                           int l, int p) {
  if (!(zsum > std::abs(detuning))) {
    throw ValidationError("zsum must exceed |detuning| so that both "
                          "frequencies are positive");
  }
  const PhysicalParams params =
      derive_params(0.5 * (zsum + detuning), 0.5 * (zsum - detuning), 1.0);
  InternalParams internal =
      to_internal(params, BeamProfile{l, p, 1.0, rabi_peak});
  // Keep the requested values exactly rather than the (ω0 ∓ ωL) round trip.
  internal.detuning = detuning;
  internal.zsum = zsum;
  return internal;
}

void require_off_resonance(const InternalParams& params) {
  if (!std::isfinite(params.detuning) ||
      std::abs(params.detuning) < kResonanceGuard * params.gamma) {
    throw ResonanceError("detuning is within 1e-9 Γ of resonance; the "
                         "dipole potential diverges there");
  }
  if (!(params.zsum > 0.0)) {
    throw ResonanceError("frequency sum Z must be positive");
  }
  if (std::abs(params.detuning - params.zsum) < kResonanceGuard * params.gamma) {
    throw ResonanceError("degenerate frequencies: |Δ − Z| below 1e-9 Γ");
  }
}

std::vector<std::string> preset_names() {
  return {"stamper_kurn_1998", "desk_synthetic"};
}

Preset load_preset(std::string_view name, GammaConvention convention) {
  if (name == "stamper_kurn_1998") {
    // Γ is quoted as "10 MHz"; by default read as an ordinary frequency.
    const double gamma =
        convention == GammaConvention::kOrdinary ? 2.0 * kPi * 1e7 : 1e7;
    Preset preset;
    preset.name = std::string(name);
    preset.description =
        "Far-off-resonance optical trap, w0 = 6 um, Omega = 367 Gamma, "
        "LG l=0 p=2";
    preset.params = derive_params(3.2e15, 1.9e15, gamma);
    preset.beam = BeamProfile{0, 2, 6e-6, 3.67e2 * gamma};
    preset.phase = PhaseConfig{0.0, 0.0};
    return preset;
  }
  if (name == "desk_synthetic") {
    Preset preset;
    preset.name = std::string(name);
    preset.description =
        "Scaled-down parameters (Gamma = 1, Delta = 3, Z = 10) on which the "
        "quadrature oracle is feasible";
    preset.params = derive_params(6.5, 3.5, 1.0);
    preset.beam = BeamProfile{0, 2, 1.0, 2.0};
    preset.phase = PhaseConfig{0.0, 0.0};
    return preset;
  }
  if (name == "chu_1985") {
    throw ValidationError(
        "preset not available: no parameter values were published for "
        "chu_1985");
  }
  std::ostringstream msg;
  msg << "unknown preset '" << name << "'; available presets:";
  for (const auto& known : preset_names()) msg << ' ' << known;
  throw ValidationError(msg.str());
}

PhysicalParams mirror_detuning(const PhysicalParams& params) {
  return derive_params(params.omegaL, params.omega0, params.gamma);
}

PhysicalParams with_detuning_sign(const PhysicalParams& params, int sign) {
  if (sign != 1 && sign != -1) {
    throw ValidationError("detuning sign must be +1 or -1");
  }
  const bool positive = params.detuning > 0.0;
  if ((sign > 0) == positive) return params;
  return mirror_detuning(params);
}

}  // namespace fortcalc
