#pragma once

namespace fortcalc {

// Laguerre-Gaussian LG_{l,p} mode at the waist plane.
//
// Power-normalization constants are folded into rabi_peak so that an l = 0
// mode has Ω(0) == rabi_peak. The radial coordinate and waist share units.
struct BeamProfile {
  int l = 0;
  int p = 0;
  double waist = 1.0;
  double rabi_peak = 0.0;
};

void validate(const BeamProfile& beam);

// Generalized Laguerre polynomial L_p^alpha(x) via the three-term recurrence
//   (k+1) L_{k+1} = (2k + 1 + alpha − x) L_k − (k + alpha) L_{k−1}.
double assoc_laguerre(int p, int alpha, double x);

// Signed Rabi frequency
//   Ω(r) = Ω0 (√2 r/w0)^|l| L_p^|l|(2r²/w0²) exp(−r²/w0²).
// The sign flips between rings; callers use Ω² or Ω·dΩ/dr.
double rabi_profile(double r, const BeamProfile& beam);

// Analytic dΩ/dr, using d/dx L_p^a(x) = −L_{p−1}^{a+1}(x).
double rabi_gradient(double r, const BeamProfile& beam);

}  // namespace fortcalc
