#include "fortcalc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fortcalc/errors.hpp"
#include "fortcalc/quadrature.hpp"

namespace fortcalc {
namespace {

// Re(c·w) written out so that an exactly real c contributes nothing from
// the imaginary part of w.
double real_product(std::complex<double> c, std::complex<double> w) {
  return c.real() * w.real() - c.imag() * w.imag();
}

double sum_enabled(TimeCoefficient& coeff, const TermToggles& toggles) {
  if (!toggles.term1) coeff.term1 = 0.0;
  if (!toggles.term2) coeff.term2 = 0.0;
  if (!toggles.term3) coeff.term3 = 0.0;
  return coeff.term1 + coeff.term2 + coeff.term3;
}

}  // namespace

std::complex<double> phase_factor(const PhaseConfig& phase) {
  return std::polar(1.0, 2.0 * phase.phi) * std::polar(1.0, 2.0 * phase.theta0);
}

double modified_linewidth(double gamma, double rabi) {
  return 2.0 * std::sqrt(gamma * gamma / 4.0 + rabi * rabi / 2.0);
}

TimeCoefficient momentum_coefficient(double t, const InternalParams& params,
                                     const PhaseConfig& phase,
                                     const TermToggles& toggles) {
  require_off_resonance(params);
  const double delta = params.detuning;
  const double z = params.zsum;
  const double dz = delta - z;
  const auto c = phase_factor(phase);

  TimeCoefficient coeff;
  coeff.term1 = -2.0 * std::sin(delta * t) / (delta * delta) + 2.0 * t / delta;
  coeff.term2 = 2.0 * std::sin(z * t) / (z * z) - 2.0 * t / z;
  const std::complex<double> bracket(
      std::sin(dz * t) / (z * dz) + t / z, std::cos(dz * t) / (z * dz));
  coeff.term3 = 4.0 * real_product(c, bracket);
  coeff.value = sum_enabled(coeff, toggles);
  return coeff;
}

TimeCoefficient force_coefficient(double t, const InternalParams& params,
                                  const PhaseConfig& phase,
                                  const TermToggles& toggles) {
  require_off_resonance(params);
  const double delta = params.detuning;
  const double z = params.zsum;
  const double dz = delta - z;
  const auto c = phase_factor(phase);

  const double s_delta = std::sin(0.5 * delta * t);
  const double s_z = std::sin(0.5 * z * t);
  TimeCoefficient coeff;
  coeff.term1 = 4.0 * s_delta * s_delta / delta;
  coeff.term2 = -4.0 * s_z * s_z / z;
  const std::complex<double> bracket(std::cos(dz * t) / z + 1.0 / z,
                                     -std::sin(dz * t) / z);
  coeff.term3 = 4.0 * real_product(c, bracket);
  coeff.value = sum_enabled(coeff, toggles);
  return coeff;
}

AveragedCoefficient averaged_coefficient_numeric(const InternalParams& params,
                                                 double rabi,
                                                 const PhaseConfig& phase,
                                                 const TermToggles& toggles,
                                                 double rel_tol) {
  require_off_resonance(params);
  if (!(rel_tol > 0.0)) throw ValidationError("rel_tol must be > 0");
  const double delta = params.detuning;
  const double z = params.zsum;
  const double linewidth = modified_linewidth(params.gamma, rabi);

  const double ratio = std::max(std::abs(delta), z) / linewidth;
  if (ratio > kOracleMaxOscillationRatio) {
    std::ostringstream msg;
    msg << "quadrature oracle infeasible: max(|Delta|, Z)/Gamma' = " << ratio
        << " exceeds " << kOracleMaxOscillationRatio
        << "; use desk-scale parameters (e.g. preset desk_synthetic)";
    throw FeasibilityError(msg.str());
  }

  const double fastest = std::max({std::abs(delta), z, std::abs(delta - z)});
  const double horizon = 40.0 / linewidth;
  const double max_width = 1.0 / (8.0 * fastest);
  auto panels = static_cast<std::size_t>(std::ceil(horizon / max_width));

  // Weight beyond the horizon is e^{−40}; |C_F| ≤ 4/|Δ| + 4/Z + 12/Z.
  const double bound = 4.0 / std::abs(delta) + 16.0 / z;
  const double tail = std::exp(-linewidth * horizon) * bound;

  auto integrand = [&](double t) {
    return linewidth * std::exp(-linewidth * t) *
           force_coefficient(t, params, phase, toggles).value;
  };

  static const GaussLegendre rule(10);
  double coarse = rule.integrate_panels(integrand, 0.0, horizon, panels);
  AveragedCoefficient result;
  result.horizon = horizon;
  result.linewidth = linewidth;
  result.truncation_bound = tail;
  constexpr int kMaxDoublings = 4;
  for (int doubling = 0; doubling <= kMaxDoublings; ++doubling) {
    const double fine =
        rule.integrate_panels(integrand, 0.0, horizon, 2 * panels);
    const double error = std::abs(fine - coarse) + tail;
    result.value = fine;
    result.error_estimate = error;
    result.panels = 2 * panels;
    if (error <= rel_tol * std::abs(fine)) return result;
    coarse = fine;
    panels *= 2;
  }
  std::ostringstream msg;
  msg << "averaged force coefficient did not reach rel_tol " << rel_tol
      << " (estimate " << result.value << ", error " << result.error_estimate
      << ")";
  throw ConvergenceError(msg.str(), result.value, result.error_estimate);
}

}  // namespace fortcalc
