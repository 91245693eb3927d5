#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fortcalc/beam_modes.hpp"

namespace fortcalc {

// Reduced Planck constant, J·s (CODATA exact value).
inline constexpr double kHbar = 1.054571817e-34;
inline constexpr double kPi = 3.14159265358979323846;

// Atomic and laser angular frequencies in rad/s.
//
// detuning and zsum are derived on construction (derive_params) and never
// recomputed: detuning = omega0 - omegaL, zsum = omega0 + omegaL.
struct PhysicalParams {
  double gamma = 0.0;
  double omega0 = 0.0;
  double omegaL = 0.0;
  double detuning = 0.0;
  double zsum = 0.0;
};

// Everything in units of the natural linewidth: frequencies are divided by
// Γ (so gamma == 1), energies are in ħΓ and lengths in w0.
struct InternalParams {
  double gamma = 1.0;
  double omega0 = 0.0;
  double omegaL = 0.0;
  double detuning = 0.0;
  double zsum = 0.0;

  // Conversion back to SI.
  double gamma_rad_s = 1.0;
  double waist_m = 1.0;

  // Beam in internal units: waist == 1, rabi_peak in units of Γ.
  BeamProfile beam;

  double energy_unit_joule() const { return kHbar * gamma_rad_s; }
  double length_unit_m() const { return waist_m; }
};

// Absolute phases φ and Θ(R(0)); the counter-rotating term carries the
// factor exp(2iφ)·exp(2iΘ0).
struct PhaseConfig {
  double phi = 0.0;
  double theta0 = 0.0;
};

// Selects which addends of the non-RWA potential and force are evaluated.
struct TermToggles {
  bool term1 = true;
  bool term2 = true;
  bool term3 = true;

  static constexpr TermToggles rwa_only() { return {true, false, false}; }
  friend bool operator==(const TermToggles&, const TermToggles&) = default;
};

// Reading of a linewidth quoted as "10 MHz".
enum class GammaConvention {
  kOrdinary,  // Γ = 2π × value  (rad/s)
  kLiteral,   // Γ = value       (rad/s)
};

PhysicalParams derive_params(double omega0, double omegaL, double gamma);

InternalParams to_internal(const PhysicalParams& params,
                           const BeamProfile& beam);

// Inverse of to_internal; beam waist and rabi_peak come back in SI.
std::pair<PhysicalParams, BeamProfile> to_physical(
    const InternalParams& internal);

// Builds internal parameters directly in Γ = 1, w0 = 1 units. omega0 and
// omegaL follow from (zsum ± detuning)/2.
InternalParams desk_params(double detuning, double zsum, double rabi_peak,
                           int l = 0, int p = 2);

// Throws ResonanceError when |Δ|/Γ < 1e-9 or |Δ − Z|/Γ < 1e-9.
void require_off_resonance(const InternalParams& params);

inline constexpr double kResonanceGuard = 1e-9;

struct Preset {
  std::string name;
  std::string description;
  PhysicalParams params;
  BeamProfile beam;  // SI: waist in m, rabi_peak in rad/s
  PhaseConfig phase;
};

// Registered preset names, in listing order.
std::vector<std::string> preset_names();

// Throws ValidationError for unknown names (listing the available ones) and
// for names that are known but intentionally unavailable.
Preset load_preset(std::string_view name,
                   GammaConvention convention = GammaConvention::kOrdinary);

// Mirror of the detuning: swaps ω0 and ωL so Δ → −Δ with Z unchanged.
PhysicalParams mirror_detuning(const PhysicalParams& params);

// Returns params with Δ of the requested sign (+1 or −1), mirroring if needed.
PhysicalParams with_detuning_sign(const PhysicalParams& params, int sign);

}  // namespace fortcalc
