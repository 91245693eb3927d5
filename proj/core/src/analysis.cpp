#include "fortcalc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "fortcalc/beam_modes.hpp"
#include "fortcalc/config.hpp"
#include "fortcalc/errors.hpp"

namespace fortcalc {
namespace {

constexpr double kInvPhi = 0.6180339887498948482;  // (√5 − 1)/2

// Golden-section minimization of |df| on [a, b], where df changes sign.
double refine_stationary_point(const std::function<double(double)>& df,
                               double a, double b) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = std::abs(df(c));
  double fd = std::abs(df(d));
  for (int iter = 0; iter < 200; ++iter) {
    if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() *
                     std::max(1.0, std::abs(a))) {
      break;
    }
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = std::abs(df(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = std::abs(df(d));
    }
  }
  return fc < fd ? c : d;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

ScanCurve radial_scan(const InternalParams& params, const PhaseConfig& phase,
                      const TermToggles& toggles, const GridSpec& grid,
                      std::string label) {
  validate(grid);
  require_off_resonance(params);
  ScanCurve curve;
  curve.params = params;
  curve.meta = ScanMeta{std::move(label), toggles, phase, grid};
  const auto n = static_cast<std::size_t>(grid.n_points);
  curve.radii.reserve(n);
  curve.rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r =
        grid.r_max * static_cast<double>(i) / static_cast<double>(n - 1);
    const double rabi = rabi_profile(r, params.beam);
    const double grad = rabi_gradient(r, params.beam);
    curve.radii.push_back(r);
    curve.rows.push_back(ScanRow{potential_at_rabi(rabi, params, phase, toggles),
                                 force_at_rabi(rabi, grad, params, phase,
                                               toggles)});
  }
  return curve;
}

TrapExtrema find_extrema(const std::function<double(double)>& f,
                         const std::function<double(double)>& df,
                         const std::vector<double>& radii) {
  TrapExtrema out;
  const std::size_t n = radii.size();
  if (n < 2) return out;
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) signs[i] = sign_of(df(radii[i]));

  auto push = [&](double r, ExtremumKind kind) {
    out.extrema.push_back(Extremum{r, f(r), kind});
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (signs[i] == 0) {
      // Stationary sample: an extremum if the slope rises on one side and
      // falls on the other (or, at the ends, moves away from it).
      const int left = i > 0 ? signs[i - 1] : 0;
      const int right = i + 1 < n ? signs[i + 1] : 0;
      if (i == 0 && right != 0) {
        push(radii[i], right > 0 ? ExtremumKind::kMinimum
                                 : ExtremumKind::kMaximum);
      } else if (i + 1 == n && left != 0) {
        push(radii[i], left < 0 ? ExtremumKind::kMinimum
                                : ExtremumKind::kMaximum);
      } else if (left != 0 && right != 0 && left != right) {
        push(radii[i], left < 0 ? ExtremumKind::kMinimum
                                : ExtremumKind::kMaximum);
      }
      continue;
    }
    if (i + 1 < n && signs[i + 1] != 0 && signs[i + 1] != signs[i]) {
      const double r = refine_stationary_point(df, radii[i], radii[i + 1]);
      push(r, signs[i] < 0 ? ExtremumKind::kMinimum : ExtremumKind::kMaximum);
    }
  }
  for (const auto& e : out.extrema) {
    out.depth = std::max(out.depth, std::abs(e.u_star));
  }
  return out;
}

TrapExtrema trap_extrema(const ScanCurve& curve, PotentialCurve which) {
  const InternalParams& params = curve.params;
  const PhaseConfig phase = curve.meta.phase;
  const TermToggles toggles = curve.meta.toggles;
  const bool rwa = which == PotentialCurve::kRwa;
  auto f = [&](double r) {
    const auto u = potential_nonrwa(r, params, phase, toggles);
    return rwa ? u.u_rwa : u.u_nonrwa;
  };
  auto df = [&](double r) {
    const auto force = force_closed(r, params, phase, toggles);
    return -(rwa ? force.f_rwa : force.f_nonrwa);
  };
  return find_extrema(f, df, curve.radii);
}

double correction_ratio(const InternalParams& params, const PhaseConfig& phase,
                        double r) {
  require_off_resonance(params);
  const double rabi = rabi_profile(r, params.beam);
  if (rabi == 0.0) {
    throw ValidationError("correction ratio undefined: Rabi frequency is zero "
                          "at r = " + std::to_string(r));
  }
  const auto u = potential_at_rabi(rabi, params, phase);
  // u_nonrwa − u_rwa, without the cancellation of subtracting the totals.
  return (u.term2 + u.term3) / u.u_rwa;
}

TermMagnitudes term_magnitude_report(const InternalParams& params, double r,
                                     const PhaseConfig& phase) {
  const auto u = potential_nonrwa(r, params, phase);
  auto ratio = [](double num, double den) {
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return std::abs(num / den);
  };
  return {ratio(u.term1, u.term2), ratio(u.term1, u.term3),
          ratio(u.term2, u.term3)};
}

DepthComparison compare_depths(const ScanCurve& curve) {
  DepthComparison cmp;
  cmp.rwa = trap_extrema(curve, PotentialCurve::kRwa);
  cmp.nonrwa = trap_extrema(curve, PotentialCurve::kNonRwa);
  cmp.ratio = cmp.rwa.depth > 0.0 ? cmp.nonrwa.depth / cmp.rwa.depth : 0.0;
  return cmp;
}

}  // namespace fortcalc
