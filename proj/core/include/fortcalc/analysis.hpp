#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fortcalc/potentials.hpp"
#include "fortcalc/units_params.hpp"

namespace fortcalc {

struct GridSpec {
  double r_max = 3.0;  // in w0
  int n_points = 600;
};

struct ScanRow {
  PotentialBreakdown potential;
  ForceBreakdown force;
};

struct ScanMeta {
  std::string label;  // preset name or config path
  TermToggles toggles;
  PhaseConfig phase;
  GridSpec grid;
};

// Uniform samples r_i = i·r_max/(n − 1), i = 0..n−1, with full breakdowns.
// The parameters are kept so extrema can be refined off-grid.
struct ScanCurve {
  std::vector<double> radii;
  std::vector<ScanRow> rows;
  ScanMeta meta;
  InternalParams params;
};

ScanCurve radial_scan(const InternalParams& params, const PhaseConfig& phase,
                      const TermToggles& toggles, const GridSpec& grid,
                      std::string label = {});

enum class ExtremumKind { kMinimum, kMaximum };

struct Extremum {
  double r_star = 0.0;
  double u_star = 0.0;
  ExtremumKind kind = ExtremumKind::kMinimum;
};

struct TrapExtrema {
  std::vector<Extremum> extrema;  // ordered by r_star
  double depth = 0.0;             // max |u_star|, U(∞) = 0 reference
};

enum class PotentialCurve { kRwa, kNonRwa };

// Stationary points of a smooth f on a sorted grid. Brackets come from sign
// changes of df between neighbouring samples (a sample where df is exactly 0
// is itself a stationary point, which covers the axis of l = 0 modes); each
// bracket is refined by golden-section minimization of |df|.
TrapExtrema find_extrema(const std::function<double(double)>& f,
                         const std::function<double(double)>& df,
                         const std::vector<double>& radii);

// Extrema and depth of the RWA or non-RWA potential of a scan.
TrapExtrema trap_extrema(const ScanCurve& curve,
                         PotentialCurve which = PotentialCurve::kNonRwa);

// (u_nonrwa − u_rwa)/u_rwa at r with all three terms on.
// Throws ValidationError when Ω(r) = 0.
double correction_ratio(const InternalParams& params, const PhaseConfig& phase,
                        double r);

// Absolute ratios between the potential terms at r. A zero denominator gives
// +infinity.
struct TermMagnitudes {
  double t1_over_t2 = 0.0;
  double t1_over_t3 = 0.0;
  double t2_over_t3 = 0.0;
};

TermMagnitudes term_magnitude_report(const InternalParams& params, double r,
                                     const PhaseConfig& phase = {});

struct DepthComparison {
  TrapExtrema rwa;
  TrapExtrema nonrwa;
  double ratio = 0.0;  // depth_nonrwa / depth_rwa (0 if depth_rwa == 0)
};

DepthComparison compare_depths(const ScanCurve& curve);

}  // namespace fortcalc
