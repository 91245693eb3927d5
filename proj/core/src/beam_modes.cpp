#include "fortcalc/beam_modes.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "fortcalc/errors.hpp"

namespace fortcalc {

void validate(const BeamProfile& beam) {
  if (beam.p < 0) throw ValidationError("beam p must be >= 0");
  if (!std::isfinite(beam.waist) || beam.waist <= 0.0) {
    throw ValidationError("beam waist must be finite and > 0");
  }
  if (!std::isfinite(beam.rabi_peak) || beam.rabi_peak < 0.0) {
    throw ValidationError("beam rabi_peak must be finite and >= 0");
  }
}

double assoc_laguerre(int p, int alpha, double x) {
  if (p < 0 || alpha < 0) {
    throw std::domain_error("assoc_laguerre: p and alpha must be >= 0 (got p=" +
                            std::to_string(p) +
                            ", alpha=" + std::to_string(alpha) + ")");
  }
  const double a = alpha;
  double prev = 1.0;
  if (p == 0) return prev;
  double curr = 1.0 + a - x;
  for (int k = 1; k < p; ++k) {
    const double next =
        ((2.0 * k + 1.0 + a - x) * curr - (k + a) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double rabi_profile(double r, const BeamProfile& beam) {
  const int m = std::abs(beam.l);
  const double s = r / beam.waist;
  const double x = 2.0 * s * s;
  const double radial = m == 0 ? 1.0 : std::pow(std::sqrt(2.0) * s, m);
  return beam.rabi_peak * radial * assoc_laguerre(beam.p, m, x) *
         std::exp(-s * s);
}

double rabi_gradient(double r, const BeamProfile& beam) {
  const int m = std::abs(beam.l);
  const double s = r / beam.waist;
  const double x = 2.0 * s * s;
  const double root2 = std::sqrt(2.0);
  const double lag = assoc_laguerre(beam.p, m, x);
  const double dlag_dx = beam.p == 0 ? 0.0 : -assoc_laguerre(beam.p - 1, m + 1, x);
  const double gauss = std::exp(-s * s);

  // Ω/Ω0 = R(s)·L(2s²)·e^{−s²} with R = (√2 s)^m.
  const double radial = m == 0 ? 1.0 : std::pow(root2 * s, m);
  const double dradial =
      m == 0 ? 0.0 : m * root2 * (m == 1 ? 1.0 : std::pow(root2 * s, m - 1));
  const double d_ds = dradial * lag * gauss + radial * dlag_dx * 4.0 * s * gauss -
                      2.0 * s * radial * lag * gauss;
  return beam.rabi_peak * d_ds / beam.waist;
}

}  // namespace fortcalc
