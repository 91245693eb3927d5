#pragma once

#include <complex>
#include <cstddef>

#include "fortcalc/units_params.hpp"

namespace fortcalc {

// exp(2iφ)·exp(2iΘ0). Exactly 1 for φ = Θ0 = 0.
std::complex<double> phase_factor(const PhaseConfig& phase);

// Intensity-broadened linewidth Γ′ = 2·sqrt(Γ²/4 + Ω²/2), i.e. Γ′² = Γ² + 2Ω².
double modified_linewidth(double gamma, double rabi);

// Dimensionless brace multiplying −ħ·Ω·dΩ/dr in the momentum and force
// expectations. Time is in 1/Γ; term1 is the rotating part, term2 and term3
// come from the counter-rotating couplings. Disabled terms are 0.
struct TimeCoefficient {
  double term1 = 0.0;
  double term2 = 0.0;
  double term3 = 0.0;
  double value = 0.0;  // sum of the enabled terms
};

// C_P(t):
//   [−2 sin(Δt)/Δ² + 2t/Δ] + [2 sin(Zt)/Z² − 2t/Z]
//   + 4 Re{c·[i cos((Δ−Z)t)/(Z(Δ−Z)) + sin((Δ−Z)t)/(Z(Δ−Z)) + t/Z]}.
// The third bracket is kept as written, including its t = 0 constant, which
// is nonzero for a complex phase factor c.
TimeCoefficient momentum_coefficient(double t, const InternalParams& params,
                                     const PhaseConfig& phase,
                                     const TermToggles& toggles = {});

// C_F(t) = dC_P/dt:
//   4 sin²(Δt/2)/Δ − 4 sin²(Zt/2)/Z
//   + 4 Re{c·[−i sin((Δ−Z)t)/Z + cos((Δ−Z)t)/Z + 1/Z]}.
TimeCoefficient force_coefficient(double t, const InternalParams& params,
                                  const PhaseConfig& phase,
                                  const TermToggles& toggles = {});

struct AveragedCoefficient {
  double value = 0.0;
  double error_estimate = 0.0;    // |I(2n) − I(n)| plus truncation bound
  double truncation_bound = 0.0;  // weight beyond the horizon
  double horizon = 0.0;           // T = 40/Γ′
  double linewidth = 0.0;         // Γ′
  std::size_t panels = 0;
};

// Largest max(|Δ|, Z)/Γ′ for which the quadrature oracle is attempted.
inline constexpr double kOracleMaxOscillationRatio = 1e6;

// ∫_0^∞ Γ′ e^{−Γ′t} C_F(t) dt by Gauss-Legendre panels, each no wider than
// 1/(8·max(|Δ|, Z, |Δ−Z|)), on [0, 40/Γ′]. The panel count is doubled until
// consecutive estimates agree to rel_tol.
//
// Throws FeasibilityError when max(|Δ|, Z)/Γ′ exceeds the oracle guard and
// ConvergenceError (carrying the best estimate) when rel_tol is not met.
AveragedCoefficient averaged_coefficient_numeric(
    const InternalParams& params, double rabi, const PhaseConfig& phase,
    const TermToggles& toggles = {}, double rel_tol = 1e-9);

}  // namespace fortcalc
