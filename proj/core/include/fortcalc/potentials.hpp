#pragma once

#include "fortcalc/units_params.hpp"

namespace fortcalc {

// Addends of the non-RWA light-shift potential, in units of ħΓ.
//
//   term1 = (Δ/2) ln(1 + 2Ω²/(Δ² + Γ²))
//   term2 = −(Z/2) ln(1 + 2Ω²/(Z² + Γ²))
//   term3 = −2 Re{c·[ln(1 + 2Ω²/((Δ−Z)² + Γ²))·(iΓ(Δ−Z)/(2Z) + (Δ−Z)²/(2Z))
//                    − 2Ω²/Z]}
//
// u_rwa is always the RWA potential (equal to term1 when term1 is enabled);
// u_nonrwa is the sum of the enabled terms.
struct PotentialBreakdown {
  double term1 = 0.0;
  double term2 = 0.0;
  double term3 = 0.0;
  double u_rwa = 0.0;
  double u_nonrwa = 0.0;
};

// Radial component of the time-averaged dipole force in ħΓ/w0, so that each
// term is −d/dr of the matching potential term. Same layout as
// PotentialBreakdown.
struct ForceBreakdown {
  double term1 = 0.0;
  double term2 = 0.0;
  double term3 = 0.0;
  double f_rwa = 0.0;
  double f_nonrwa = 0.0;
};

// Pointwise forms, for a given local Rabi frequency Ω (and gradient).
PotentialBreakdown potential_at_rabi(double rabi, const InternalParams& params,
                                     const PhaseConfig& phase,
                                     const TermToggles& toggles = {});
ForceBreakdown force_at_rabi(double rabi, double rabi_gradient,
                             const InternalParams& params,
                             const PhaseConfig& phase,
                             const TermToggles& toggles = {});

// (Δ/2) ln(1 + 2Ω(r)²/(Δ² + Γ²)).
double potential_rwa(double r, const InternalParams& params);

PotentialBreakdown potential_nonrwa(double r, const InternalParams& params,
                                    const PhaseConfig& phase,
                                    const TermToggles& toggles = {});

// −2Ω·dΩ/dr·{ Δ/(Δ²+Γ²+2Ω²) − Z/(Z²+Γ²+2Ω²)
//            + 2 Re[c(−iΓ(Δ−Z)/(ZX) + (Γ²+2Ω²)/(ZX) + 1/Z)] },
// X = Γ² + 2Ω² + (Δ−Z)². The denominators Δ² + Γ² + 2Ω² equal Δ² + Γ′²,
// i.e. they carry the same Γ′ damping as the survival weighting.
ForceBreakdown force_closed(double r, const InternalParams& params,
                            const PhaseConfig& phase,
                            const TermToggles& toggles = {});

// Twice the brace of force_closed: the Γ′-weighted time average of C_F as
// given in closed form. force_closed == −Ω·dΩ/dr × this.
double averaged_coefficient_closed(double rabi, const InternalParams& params,
                                   const PhaseConfig& phase,
                                   const TermToggles& toggles = {});

struct GradientReport {
  double analytic_force = 0.0;
  double minus_dU_dr = 0.0;
  double rel_err = 0.0;
};

// Compares force_closed against −[U(r+h) − U(r−h)]/(2h) for the sum of the
// enabled terms. rel_err is 0 when both sides are exactly 0.
GradientReport gradient_consistency(double r, const InternalParams& params,
                                    const PhaseConfig& phase,
                                    const TermToggles& toggles, double h);

}  // namespace fortcalc
