#include "fortcalc/potentials.hpp"

#include <cmath>
#include <complex>

#include "fortcalc/beam_modes.hpp"
#include "fortcalc/dynamics.hpp"

namespace fortcalc {
namespace {

double real_product(std::complex<double> c, std::complex<double> w) {
  return c.real() * w.real() - c.imag() * w.imag();
}

double rwa_term(double rabi2, const InternalParams& p) {
  const double delta = p.detuning;
  const double g2 = p.gamma * p.gamma;
  return 0.5 * delta * std::log1p(2.0 * rabi2 / (delta * delta + g2));
}

// Brace of the averaged force, term by term (un-toggled).
struct ForceBrace {
  double term1;
  double term2;
  double term3;
};

ForceBrace force_brace(double rabi, const InternalParams& p,
                       const PhaseConfig& phase) {
  const double delta = p.detuning;
  const double z = p.zsum;
  const double dz = delta - z;
  const double g2 = p.gamma * p.gamma;
  const double broadened = g2 + 2.0 * rabi * rabi;  // Γ′²
  const double x = broadened + dz * dz;
  const std::complex<double> bracket(broadened / (z * x) + 1.0 / z,
                                     -p.gamma * dz / (z * x));
  return {delta / (delta * delta + broadened), -z / (z * z + broadened),
          2.0 * real_product(phase_factor(phase), bracket)};
}

}  // namespace

PotentialBreakdown potential_at_rabi(double rabi, const InternalParams& params,
                                     const PhaseConfig& phase,
                                     const TermToggles& toggles) {
  require_off_resonance(params);
  const double rabi2 = rabi * rabi;
  const double z = params.zsum;
  const double dz = params.detuning - z;
  const double g2 = params.gamma * params.gamma;

  PotentialBreakdown u;
  u.u_rwa = rwa_term(rabi2, params);
  u.term1 = toggles.term1 ? u.u_rwa : 0.0;
  if (toggles.term2) {
    u.term2 = -0.5 * z * std::log1p(2.0 * rabi2 / (z * z + g2));
  }
  if (toggles.term3) {
    const double log_term = std::log1p(2.0 * rabi2 / (dz * dz + g2));
    const std::complex<double> bracket(
        log_term * (dz * dz / (2.0 * z)) - 2.0 * rabi2 / z,
        log_term * (params.gamma * dz / (2.0 * z)));
    u.term3 = -2.0 * real_product(phase_factor(phase), bracket);
  }
  u.u_nonrwa = u.term1 + u.term2 + u.term3;
  return u;
}

ForceBreakdown force_at_rabi(double rabi, double rabi_gradient,
                             const InternalParams& params,
                             const PhaseConfig& phase,
                             const TermToggles& toggles) {
  require_off_resonance(params);
  const double prefactor = -2.0 * rabi * rabi_gradient;
  const ForceBrace brace = force_brace(rabi, params, phase);

  ForceBreakdown f;
  f.f_rwa = prefactor * brace.term1;
  f.term1 = toggles.term1 ? f.f_rwa : 0.0;
  f.term2 = toggles.term2 ? prefactor * brace.term2 : 0.0;
  f.term3 = toggles.term3 ? prefactor * brace.term3 : 0.0;
  f.f_nonrwa = f.term1 + f.term2 + f.term3;
  return f;
}

double potential_rwa(double r, const InternalParams& params) {
  require_off_resonance(params);
  const double rabi = rabi_profile(r, params.beam);
  return rwa_term(rabi * rabi, params);
}

PotentialBreakdown potential_nonrwa(double r, const InternalParams& params,
                                    const PhaseConfig& phase,
                                    const TermToggles& toggles) {
  return potential_at_rabi(rabi_profile(r, params.beam), params, phase,
                           toggles);
}

ForceBreakdown force_closed(double r, const InternalParams& params,
                            const PhaseConfig& phase,
                            const TermToggles& toggles) {
  return force_at_rabi(rabi_profile(r, params.beam),
                       rabi_gradient(r, params.beam), params, phase, toggles);
}

double averaged_coefficient_closed(double rabi, const InternalParams& params,
                                   const PhaseConfig& phase,
                                   const TermToggles& toggles) {
  require_off_resonance(params);
  const ForceBrace brace = force_brace(rabi, params, phase);
  double sum = 0.0;
  if (toggles.term1) sum += brace.term1;
  if (toggles.term2) sum += brace.term2;
  if (toggles.term3) sum += brace.term3;
  return 2.0 * sum;
}

GradientReport gradient_consistency(double r, const InternalParams& params,
                                    const PhaseConfig& phase,
                                    const TermToggles& toggles, double h) {
  const double up = potential_nonrwa(r + h, params, phase, toggles).u_nonrwa;
  const double down = potential_nonrwa(r - h, params, phase, toggles).u_nonrwa;
  GradientReport report;
  report.analytic_force = force_closed(r, params, phase, toggles).f_nonrwa;
  report.minus_dU_dr = -(up - down) / (2.0 * h);
  const double diff = std::abs(report.analytic_force - report.minus_dU_dr);
  const double scale = std::abs(report.analytic_force);
  report.rel_err = diff == 0.0 ? 0.0 : (scale > 0.0 ? diff / scale : HUGE_VAL);
  return report;
}

}  // namespace fortcalc
