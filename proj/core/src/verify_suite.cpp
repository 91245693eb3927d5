#include "fortcalc/verify_suite.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "fortcalc/analysis.hpp"
#include "fortcalc/beam_modes.hpp"
#include "fortcalc/dynamics.hpp"
#include "fortcalc/errors.hpp"
#include "fortcalc/potentials.hpp"
#include "fortcalc/units_params.hpp"

namespace fortcalc {
namespace {

// splitmix64; portable, so draws do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  int integer(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double sign() { return (next() & 1u) ? 1.0 : -1.0; }

 private:
  std::uint64_t state_;
};

std::uint64_t check_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char ch : name) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ull;
  }
  return seed ^ h;
}

struct Context {
  Profile profile;
  bool full() const { return profile == Profile::kFull; }
};

using CheckBody = std::function<void(const Context&, Rng&, CheckResult&)>;

struct CheckSpec {
  const char* name;
  const char* oracle;
  bool full_only;
  CheckBody body;
};

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

void upper_bound(CheckResult& out, double measured, double tolerance) {
  out.measured = measured;
  out.expected = 0.0;
  out.tolerance = tolerance;
  out.status = measured <= tolerance ? CheckStatus::kPass : CheckStatus::kFail;
}

void in_band(CheckResult& out, double measured, double lo, double hi) {
  out.measured = measured;
  out.expected = 0.5 * (lo + hi);
  out.tolerance = 0.5 * (hi - lo);
  out.status = (measured >= lo && measured <= hi) ? CheckStatus::kPass
                                                  : CheckStatus::kFail;
}

InternalParams stamper_kurn(int detuning_sign = 1) {
  const Preset preset = load_preset("stamper_kurn_1998");
  return to_internal(with_detuning_sign(preset.params, detuning_sign),
                     preset.beam);
}

InternalParams random_desk(Rng& rng, double rabi_lo = 0.0, double rabi_hi = 3.0) {
  const double delta = rng.sign() * rng.uniform(1.0, 5.0);
  const double z = rng.uniform(8.0, 20.0);
  return desk_params(delta, z, rng.uniform(rabi_lo, rabi_hi));
}

// Hand-expanded L_p^a(x) for p ≤ 4; returns {value, sum of |monomials|}.
std::pair<double, double> explicit_laguerre(int p, int alpha, double x) {
  const double a = alpha;
  std::vector<double> terms;
  switch (p) {
    case 0:
      terms = {1.0};
      break;
    case 1:
      terms = {-x, a + 1.0};
      break;
    case 2:
      terms = {x * x / 2.0, -(a + 2.0) * x, (a + 1.0) * (a + 2.0) / 2.0};
      break;
    case 3:
      terms = {-x * x * x / 6.0, (a + 3.0) * x * x / 2.0,
               -(a + 2.0) * (a + 3.0) * x / 2.0,
               (a + 1.0) * (a + 2.0) * (a + 3.0) / 6.0};
      break;
    case 4:
      terms = {x * x * x * x / 24.0, -(a + 4.0) * x * x * x / 6.0,
               (a + 3.0) * (a + 4.0) * x * x / 4.0,
               -(a + 2.0) * (a + 3.0) * (a + 4.0) * x / 6.0,
               (a + 1.0) * (a + 2.0) * (a + 3.0) * (a + 4.0) / 24.0};
      break;
    default:
      throw std::logic_error("explicit_laguerre: p > 4");
  }
  double value = 0.0, scale = 0.0;
  for (double t : terms) {
    value += t;
    scale += std::abs(t);
  }
  return {value, scale};
}

std::uint64_t ulp_distance(double a, double b) {
  // Both arguments positive and finite here.
  const auto ia = std::bit_cast<std::uint64_t>(a);
  const auto ib = std::bit_cast<std::uint64_t>(b);
  return ia > ib ? ia - ib : ib - ia;
}

// Γ′-weighted average of C_F from the elementary antiderivatives
//   ⟨sin²(ωt/2)⟩ = ω²/(2(Γ′² + ω²)), ⟨cos ωt⟩ = Γ′²/(Γ′² + ω²),
//   ⟨sin ωt⟩ = Γ′ω/(Γ′² + ω²).
double weighted_average_by_hand(const InternalParams& p, double rabi,
                                const PhaseConfig& phase) {
  const double g2 = p.gamma * p.gamma + 2.0 * rabi * rabi;
  const double gp = std::sqrt(g2);
  const double d = p.detuning, z = p.zsum, dz = d - z;
  const double t1 = 4.0 / d * d * d / (2.0 * (g2 + d * d));
  const double t2 = -4.0 / z * z * z / (2.0 * (g2 + z * z));
  const std::complex<double> bracket(g2 / (g2 + dz * dz) / z + 1.0 / z,
                                     -gp * dz / (g2 + dz * dz) / z);
  return t1 + t2 + 4.0 * (phase_factor(phase) * bracket).real();
}

std::vector<CheckSpec> build_checks() {
  std::vector<CheckSpec> checks;

  // --- special functions and beam profiles -------------------------------
  checks.push_back({"laguerre.recurrence_vs_explicit",
                    "hand-expanded polynomials for p <= 4", false,
                    [](const Context& ctx, Rng& rng, CheckResult& out) {
                      double worst = 0.0;
                      const int draws = ctx.full() ? 2000 : 200;
                      for (int i = 0; i < draws; ++i) {
                        const int p = rng.integer(0, 4);
                        const int alpha = rng.integer(0, 4);
                        const double x = rng.uniform(0.0, 12.0);
                        const auto [ref, scale] = explicit_laguerre(p, alpha, x);
                        worst = std::max(
                            worst, std::abs(assoc_laguerre(p, alpha, x) - ref) / scale);
                      }
                      upper_bound(out, worst, 1e-13);
                      out.detail = "error relative to the sum of |monomials|";
                    }});

  checks.push_back({"laguerre.l2_roots", "roots 2 -+ sqrt(2) of 1 - 2x + x^2/2",
                    false, [](const Context&, Rng&, CheckResult& out) {
                      const double s = std::sqrt(2.0);
                      upper_bound(out,
                                  std::max(std::abs(assoc_laguerre(2, 0, 2.0 - s)),
                                           std::abs(assoc_laguerre(2, 0, 2.0 + s))),
                                  1e-12);
                    }});

  checks.push_back({"beam.gradient_vs_central_difference",
                    "central difference, h = 1e-6 w0", false,
                    [](const Context& ctx, Rng& rng, CheckResult& out) {
                      const double h = 1e-6;
                      double worst = 0.0;
                      const int draws = ctx.full() ? 400 : 100;
                      for (int i = 0; i < draws; ++i) {
                        BeamProfile beam;
                        double r = 0.0, g = 0.0;
                        // Stationary points of Ω make the relative error
                        // meaningless; resample there.
                        do {
                          beam = {rng.integer(0, 2), rng.integer(0, 4), 1.0, 1.0};
                          r = rng.uniform(0.0, 3.0);
                          g = rabi_gradient(r, beam);
                        } while (std::abs(g) < 1e-3);
                        const double cd =
                            (rabi_profile(r + h, beam) - rabi_profile(r - h, beam)) / (2 * h);
                        worst = std::max(worst, std::abs(g - cd) / std::max(std::abs(g), 1e-12));
                      }
                      upper_bound(out, worst, 1e-6);
                    }});

  checks.push_back({"beam.intensity_zero_count",
                    "sign changes of the l = 0 profile on a fine grid", false,
                    [](const Context&, Rng&, CheckResult& out) {
                      int mismatches = 0;
                      for (int p = 0; p <= 4; ++p) {
                        const BeamProfile beam{0, p, 1.0, 1.0};
                        int changes = 0;
                        double prev = rabi_profile(1e-3, beam);
                        for (int i = 2; i <= 8000; ++i) {
                          const double v = rabi_profile(i * 1e-3, beam);
                          if ((v > 0) != (prev > 0)) ++changes;
                          prev = v;
                        }
                        if (changes != p) ++mismatches;
                      }
                      upper_bound(out, mismatches, 0.0);
                      out.detail = "p = 0..4, r in (0, 8] w0";
                    }});

  checks.push_back({"beam.lg02_zero_radii",
                    "r/w0 = sqrt((2 -+ sqrt(2))/2) from the roots of L_2", false,
                    [](const Context&, Rng&, CheckResult& out) {
                      const BeamProfile beam{0, 2, 1.0, 1.0};
                      const double s = std::sqrt(2.0);
                      const double roots[] = {std::sqrt((2.0 - s) / 2.0),
                                              std::sqrt((2.0 + s) / 2.0)};
                      double worst = 0.0;
                      for (double r : roots) {
                        worst = std::max(worst, std::abs(rabi_profile(r, beam)));
                      }
                      upper_bound(out, worst, 1e-12);
                    }});

  checks.push_back({"linewidth.identity", "Gamma'^2 == Gamma^2 + 2 Omega^2", false,
                    [](const Context& ctx, Rng& rng, CheckResult& out) {
                      std::uint64_t worst = 0;
                      const int draws = ctx.full() ? 10000 : 1000;
                      for (int i = 0; i < draws; ++i) {
                        const double g = rng.uniform(0.1, 10.0);
                        const double w = rng.uniform(0.0, 10.0);
                        const double gp = modified_linewidth(g, w);
                        worst = std::max(worst, ulp_distance(gp * gp, g * g + 2.0 * w * w));
                        worst = std::max(worst, ulp_distance(modified_linewidth(g, 0.0), g));
                      }
                      upper_bound(out, static_cast<double>(worst), 4.0);
                      out.detail = "ulp distance";
                    }});

  // --- time-domain coefficients ------------------------------------------
  checks.push_back({"dynamics.force_is_time_derivative",
                    "central difference of the momentum coefficient in t", false,
                    [](const Context& ctx, Rng& rng, CheckResult& out) {
                      double worst = 0.0;
                      const int draws = ctx.full() ? 200 : 50;
                      for (int i = 0; i < draws; ++i) {
                        InternalParams p;
                        PhaseConfig phase;
                        double t = 0.0, f = 0.0;
                        // Resample near zeros of C_F, where the difference
                        // quotient's roundoff exceeds the relative tolerance.
                        do {
                          p = random_desk(rng);
                          phase = {(rng.next() & 1u) ? kPi / 6.0 : 0.0, 0.0};
                          t = rng.uniform(0.1, 3.0) / std::abs(p.detuning);
                          f = force_coefficient(t, p, phase).value;
                        } while (std::abs(f) <
                                 0.01 * (4.0 / std::abs(p.detuning) + 16.0 / p.zsum));
                        const double h = 1e-6 / std::abs(p.detuning);
                        const double cd = (momentum_coefficient(t + h, p, phase).value -
                                           momentum_coefficient(t - h, p, phase).value) /
                                          (2 * h);
                        worst = std::max(worst, std::abs(cd - f) / std::abs(f));
                      }
                      upper_bound(out, worst, 1e-6);
                      out.detail = "phase factor in {1, exp(i pi/3)}";
                    }});

  checks.push_back({"dynamics.rwa_limit_large_z", "4 sin^2(Delta t/2)/Delta at Z = 1e12",
                    false, [](const Context&, Rng&, CheckResult& out) {
                      const InternalParams p = desk_params(3.0, 1e12, 1.0);
                      double worst = 0.0;
                      for (int i = 0; i <= 200; ++i) {
                        const double t = 0.05 * i;
                        const double s = std::sin(1.5 * t);
                        worst = std::max(worst, std::abs(force_coefficient(t, p, {}).value -
                                                         4.0 * s * s / 3.0));
                      }
                      upper_bound(out, worst, 1e-10);
                    }});

  checks.push_back({"dynamics.secular_slope",
                    "least-squares slope of C_P on t in [100, 200]/Delta vs 2/Delta + 2/Z",
                    false, [](const Context&, Rng&, CheckResult& out) {
                      const InternalParams p = desk_params(3.0, 10.0, 1.0);
                      const int n = 2001;
                      double st = 0, sc = 0, stt = 0, stc = 0;
                      for (int i = 0; i < n; ++i) {
                        const double t = (100.0 + 100.0 * i / (n - 1)) / 3.0;
                        const double c = momentum_coefficient(t, p, {}).value;
                        st += t;
                        sc += c;
                        stt += t * t;
                        stc += t * c;
                      }
                      const double slope = (n * stc - st * sc) / (n * stt - st * st);
                      const double expected = 2.0 / 3.0 + 2.0 / 10.0;
                      upper_bound(out, rel_diff(slope, expected), 1e-3);
                      out.detail = "slope " + std::to_string(slope);
                    }});

  checks.push_back({"dynamics.force_bound", "|C_F| <= 4/|Delta| + 16/Z", false,
                    [](const Context& ctx, Rng& rng, CheckResult& out) {
                      double worst = 0.0;
                      const int draws = ctx.full() ? 40 : 10;
                      for (int i = 0; i < draws; ++i) {
                        const InternalParams p = random_desk(rng);
                        const PhaseConfig phase{rng.uniform(0.0, kPi), rng.uniform(0.0, kPi)};
                        const double bound = 4.0 / std::abs(p.detuning) + 16.0 / p.zsum;
                        for (int k = 0; k <= 500; ++k) {
                          worst = std::max(worst,
                                           std::abs(force_coefficient(0.02 * k, p, phase).value) /
                                               bound);
                        }
                      }
                      upper_bound(out, worst, 1.0);
                      out.detail = "max |C_F|/bound";
                    }});

  // --- averaged force: quadrature oracle ---------------------------------
  checks.push_back({"average.quadrature_vs_closed",
                    "Gauss-Legendre panel quadrature of the Gamma'-weighted C_F", false,
                    [](const Context& ctx, Rng& rng, CheckResult& out) {
                      double worst = 0.0;
                      for (double rabi : {0.5, 2.0}) {
                        for (double delta : {3.0, -3.0}) {
                          const InternalParams p = desk_params(delta, 10.0, rabi);
                          const double num = averaged_coefficient_numeric(p, rabi, {}).value;
                          worst = std::max(worst,
                                           rel_diff(num, averaged_coefficient_closed(rabi, p, {})));
                        }
                      }
                      if (ctx.full()) {
                        for (int i = 0; i < 12; ++i) {
                          const InternalParams p = random_desk(rng);
                          const double rabi = p.beam.rabi_peak;
                          const double num = averaged_coefficient_numeric(p, rabi, {}).value;
                          worst = std::max(worst,
                                           rel_diff(num, averaged_coefficient_closed(rabi, p, {})));
                        }
                      }
                      upper_bound(out, worst, 1e-6);
                      out.detail = "Omega in {0.5, 2}, Delta = +-3, Z = 10, phase factor 1";
                    }});

  checks.push_back({"average.rwa_reduction", "2 Delta/(Delta^2 + Gamma^2 + 2 Omega^2)",
                    false, [](const Context&, Rng& rng, CheckResult& out) {
                      double worst = 0.0;
                      for (int i = 0; i < 4; ++i) {
                        const InternalParams p = random_desk(rng);
                        const double w = p.beam.rabi_peak;
                        const double d = p.detuning;
                        const double num =
                            averaged_coefficient_numeric(p, w, {}, TermToggles::rwa_only()).value;
                        worst = std::max(worst, rel_diff(num, 2 * d / (d * d + 1 + 2 * w * w)));
                      }
                      upper_bound(out, worst, 1e-6);
                    }});

  checks.push_back({"average.theta0_pi_invariance",
                    "quadrature at theta0 and theta0 + pi", false,
                    [](const Context&, Rng& rng, CheckResult& out) {
                      const InternalParams p = random_desk(rng, 0.5, 3.0);
                      const double w = p.beam.rabi_peak;
                      const double theta = rng.uniform(0.0, kPi);
                      const double a = averaged_coefficient_numeric(p, w, {0.1, theta}).value;
                      const double b = averaged_coefficient_numeric(p, w, {0.1, theta + kPi}).value;
                      upper_bound(out, rel_diff(a, b), 1e-12);
                    }});

  checks.push_back({"average.complex_phase_linewidth",
                    "quadrature with phase factor exp(i pi/4)", true,
                    [](const Context&, Rng&, CheckResult& out) {
                      const InternalParams p = desk_params(3.0, 10.0, 2.0);
                      const double w = 2.0;
                      const PhaseConfig phase{kPi / 8.0, 0.0};
                      const double num = averaged_coefficient_numeric(p, w, phase).value;
                      const double closed = averaged_coefficient_closed(w, p, phase);
                      // Exact average has Γ′(Δ−Z) in the imaginary numerator
                      // where the closed form has Γ(Δ−Z).
                      const double gp = modified_linewidth(1.0, w);
                      const double dz = p.detuning - p.zsum;
                      const double x = gp * gp + dz * dz;
                      const double predicted =
                          4.0 * (gp - 1.0) * dz * phase_factor(phase).imag() / (p.zsum * x);
                      const double deviation = num - closed;
                      out.measured = deviation;
                      out.expected = predicted;
                      out.tolerance = 1e-6 * std::abs(closed);
                      const double by_hand = weighted_average_by_hand(p, w, phase);
                      const bool explained = std::abs(deviation - predicted) <= out.tolerance &&
                                             rel_diff(num, by_hand) <= 1e-6;
                      if (!explained) {
                        out.status = CheckStatus::kFail;
                      } else if (std::abs(deviation) <= out.tolerance) {
                        out.status = CheckStatus::kPass;
                      } else {
                        out.status = CheckStatus::kKnownDiscrepancy;
                      }
                      char buf[160];
                      std::snprintf(buf, sizeof buf,
                                    "closed form uses Gamma(Delta-Z) where the average gives "
                                    "Gamma'(Delta-Z); relative deviation %.3e",
                                    std::abs(deviation / closed));
                      out.detail = buf;
                    }});

  // --- potentials --------------------------------------------------------
  checks.push_back({"potentials.gradient_identity",
                    "central difference of each potential term, h = 1e-4 w0", false,
                    [](const Context& ctx, Rng& rng, CheckResult& out) {
                      double worst = 0.0;
                      const int draws = ctx.full() ? 80 : 20;
                      const TermToggles singles[] = {{true, false, false},
                                                     {false, true, false},
                                                     {false, false, true}};
                      for (int i = 0; i < draws; ++i) {
                        const InternalParams p = random_desk(rng, 0.5, 3.0);
                        double r = 0.0;
                        do {
                          r = rng.uniform(0.1, 2.5);
                        } while (std::abs(rabi_profile(r, p.beam) * rabi_gradient(r, p.beam)) <
                                 0.05 * p.beam.rabi_peak * p.beam.rabi_peak);
                        for (const auto& toggles : singles) {
                          worst = std::max(worst,
                                           gradient_consistency(r, p, {}, toggles, 1e-4).rel_err);
                        }
                      }
                      upper_bound(out, worst, 1e-5);
                      out.detail = "term by term, real phase factor";
                    }});

  checks.push_back({"potentials.gradient_h_sweep",
                    "observed order of central differencing between h = 1e-3 and 1e-4",
                    true, [](const Context&, Rng&, CheckResult& out) {
                      const InternalParams p = desk_params(3.0, 10.0, 2.0);
                      const double e3 = gradient_consistency(0.3, p, {}, {}, 1e-3).rel_err;
                      const double e4 = gradient_consistency(0.3, p, {}, {}, 1e-4).rel_err;
                      in_band(out, std::log10(e3 / e4), 1.8, 2.2);
                    }});

  checks.push_back({"potentials.axis_zero_force",
                    "symmetric difference at r = 0 (l = 0)", false,
                    [](const Context&, Rng&, CheckResult& out) {
                      const InternalParams p = desk_params(3.0, 10.0, 2.0);
                      const auto rep = gradient_consistency(0.0, p, {}, {}, 1e-4);
                      upper_bound(out, std::max(std::abs(rep.analytic_force),
                                                std::abs(rep.minus_dU_dr)),
                                  1e-10);
                    }});

  checks.push_back({"potentials.small_saturation_law",
                    "first-order expansion of the logarithms: ratio -> Delta/Z for "
                    "|Delta|, Z >> Gamma",
                    false, [](const Context& ctx, Rng& rng, CheckResult& out) {
                      double worst = 0.0;
                      const int draws = ctx.full() ? 40 : 10;
                      for (int i = 0; i < draws; ++i) {
                        const double delta = rng.sign() * rng.uniform(1e3, 5e3);
                        InternalParams p = desk_params(delta, rng.uniform(8e3, 2e4), 1e-2);
                        const double r = rng.uniform(0.0, 0.5);
                        const auto u = potential_nonrwa(r, p, {});
                        worst = std::max(worst, rel_diff((u.u_nonrwa - u.u_rwa) / u.u_rwa,
                                                         p.detuning / p.zsum));
                      }
                      upper_bound(out, worst, 1e-3);
                    }});

  checks.push_back({"potentials.small_saturation_linearized",
                    "ln(1 + x) -> x in every term, Gamma kept", false,
                    [](const Context& ctx, Rng& rng, CheckResult& out) {
                      double worst = 0.0;
                      const int draws = ctx.full() ? 40 : 10;
                      for (int i = 0; i < draws; ++i) {
                        InternalParams p = random_desk(rng);
                        p.beam.rabi_peak = 1e-4;
                        const double r = rng.uniform(0.0, 0.5);
                        const double w = rabi_profile(r, p.beam);
                        const double d = p.detuning, z = p.zsum, dz = d - z;
                        const double w2 = w * w;
                        const double t1 = d * w2 / (d * d + 1.0);
                        const double t23 = -z * w2 / (z * z + 1.0) -
                                           2.0 * (w2 / (dz * dz + 1.0) * dz * dz / z -
                                                  2.0 * w2 / z);
                        const auto u = potential_nonrwa(r, p, {});
                        worst = std::max(worst, rel_diff((u.term2 + u.term3) / u.term1, t23 / t1));
                      }
                      upper_bound(out, worst, 1e-3);
                    }});

  checks.push_back({"potentials.phase_reality",
                    "term 3 from its real-only form, bitwise", false,
                    [](const Context&, Rng& rng, CheckResult& out) {
                      int mismatches = 0;
                      for (int i = 0; i < 50; ++i) {
                        const InternalParams p = random_desk(rng);
                        const double w = p.beam.rabi_peak;
                        const double z = p.zsum, dz = p.detuning - z;
                        const double real_only =
                            -2.0 * (std::log1p(2.0 * w * w / (dz * dz + 1.0)) *
                                        (dz * dz / (2.0 * z)) -
                                    2.0 * w * w / z);
                        if (potential_at_rabi(w, p, {}).term3 != real_only) ++mismatches;
                      }
                      upper_bound(out, mismatches, 0.0);
                    }});

  checks.push_back({"potentials.stamper_kurn_sign_structure",
                    "term2 <= 0, term3 >= 0, term2 + term3 >= 0 on r in [0, 3] w0", false,
                    [](const Context&, Rng&, CheckResult& out) {
                      const auto curve = radial_scan(stamper_kurn(), {}, {}, {3.0, 600});
                      int violations = 0;
                      for (const auto& row : curve.rows) {
                        const auto& u = row.potential;
                        if (u.term2 > 0.0 || u.term3 < 0.0 || u.term2 + u.term3 < 0.0) {
                          ++violations;
                        }
                      }
                      upper_bound(out, violations, 0.0);
                    }});

  // --- analysis ----------------------------------------------------------
  checks.push_back({"analysis.correction_ratio_band",
                    "reference band 0.255 +- 0.02 (about one quarter)", false,
                    [](const Context&, Rng&, CheckResult& out) {
                      in_band(out, correction_ratio(stamper_kurn(), {}, 0.0), 0.235, 0.275);
                    }});

  checks.push_back({"analysis.correction_ratio_small_saturation",
                    "Delta/Z with Z = omega0 + omegaL", false,
                    [](const Context&, Rng&, CheckResult& out) {
                      const InternalParams p = stamper_kurn();
                      upper_bound(out,
                                  rel_diff(correction_ratio(p, {}, 0.0), p.detuning / p.zsum),
                                  1e-3);
                    }});

  checks.push_back({"analysis.correction_ratio_sign_flip",
                    "ratio(-Delta) == -ratio(+Delta) at small saturation", false,
                    [](const Context&, Rng&, CheckResult& out) {
                      const double up = correction_ratio(stamper_kurn(1), {}, 0.0);
                      const double down = correction_ratio(stamper_kurn(-1), {}, 0.0);
                      upper_bound(out, rel_diff(down, -up), 1e-3);
                    }});

  for (int sign : {1, -1}) {
    checks.push_back(
        {sign > 0 ? "analysis.depth_ratio_positive_detuning"
                  : "analysis.depth_ratio_negative_detuning",
         sign > 0 ? "band [1.23, 1.28]" : "band [0.72, 0.77]", false,
         [sign](const Context&, Rng&, CheckResult& out) {
           const auto curve = radial_scan(stamper_kurn(sign), {}, {}, {3.0, 600});
           const auto cmp = compare_depths(curve);
           if (sign > 0) {
             in_band(out, cmp.ratio, 1.23, 1.28);
           } else {
             in_band(out, cmp.ratio, 0.72, 0.77);
           }
         }});
    checks.push_back(
        {sign > 0 ? "analysis.pointwise_ordering_positive_detuning"
                  : "analysis.pointwise_ordering_negative_detuning",
         sign > 0 ? "U_nonrwa >= U_rwa on every grid point"
                  : "|U_nonrwa| <= |U_rwa| wherever U_rwa < 0",
         false, [sign](const Context&, Rng&, CheckResult& out) {
           const auto curve = radial_scan(stamper_kurn(sign), {}, {}, {3.0, 600});
           int violations = 0;
           for (const auto& row : curve.rows) {
             const auto& u = row.potential;
             if (sign > 0 && u.u_nonrwa < u.u_rwa) ++violations;
             if (sign < 0 && u.u_rwa < 0.0 && std::abs(u.u_nonrwa) > std::abs(u.u_rwa)) {
               ++violations;
             }
           }
           upper_bound(out, violations, 0.0);
         }});
  }

  checks.push_back({"analysis.chu_regime_term_ratio",
                    "Z/Delta for Delta = 5e11 rad/s, band [0.9e4, 1.1e4]", false,
                    [](const Context&, Rng&, CheckResult& out) {
                      const Preset sk = load_preset("stamper_kurn_1998");
                      const double z = sk.params.zsum;
                      const double delta = 5e11;
                      const PhysicalParams chu =
                          derive_params(0.5 * (z + delta), 0.5 * (z - delta), sk.params.gamma);
                      const auto m = term_magnitude_report(to_internal(chu, sk.beam), 0.0);
                      in_band(out, m.t1_over_t2, 0.9e4, 1.1e4);
                    }});

  checks.push_back({"analysis.intensity_extrema_count",
                    "sign changes of d(Omega^2)/dr for l = 0, p = 2", false,
                    [](const Context&, Rng&, CheckResult& out) {
                      const BeamProfile beam{0, 2, 1.0, 1.0};
                      std::vector<double> radii;
                      for (int i = 0; i < 600; ++i) radii.push_back(3.0 * i / 599.0);
                      const auto found = find_extrema(
                          [&](double r) { return std::pow(rabi_profile(r, beam), 2); },
                          [&](double r) {
                            return 2.0 * rabi_profile(r, beam) * rabi_gradient(r, beam);
                          },
                          radii);
                      int maxima = 0;
                      for (const auto& e : found.extrema) {
                        if (e.kind == ExtremumKind::kMaximum) ++maxima;
                      }
                      in_band(out, maxima, 3.0, 3.0);
                      out.detail = std::to_string(found.extrema.size()) +
                                   " stationary points, central peak plus 2 rings";
                    }});

  checks.push_back({"analysis.extrema_grid_stability",
                    "extrema locations from 600- and 1200-point grids", true,
                    [](const Context&, Rng&, CheckResult& out) {
                      const InternalParams p = stamper_kurn();
                      const auto a = trap_extrema(radial_scan(p, {}, {}, {3.0, 600}));
                      const auto b = trap_extrema(radial_scan(p, {}, {}, {3.0, 1200}));
                      double worst = a.extrema.size() == b.extrema.size() ? 0.0 : HUGE_VAL;
                      for (std::size_t i = 0; i < std::min(a.extrema.size(), b.extrema.size());
                           ++i) {
                        worst = std::max(worst, std::abs(a.extrema[i].r_star - b.extrema[i].r_star));
                      }
                      upper_bound(out, worst, 1e-6);
                      out.detail = "max location shift in w0";
                    }});

  checks.push_back({"analysis.depth_grid_stability",
                    "depth from 600- and 1200-point grids", false,
                    [](const Context&, Rng&, CheckResult& out) {
                      const InternalParams p = stamper_kurn();
                      const auto a = trap_extrema(radial_scan(p, {}, {}, {3.0, 600}));
                      const auto b = trap_extrema(radial_scan(p, {}, {}, {3.0, 1200}));
                      upper_bound(out, rel_diff(a.depth, b.depth), 1e-9);
                    }});

  return checks;
}

}  // namespace

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
    case CheckStatus::kKnownDiscrepancy:
      return "known-paper-discrepancy";
  }
  return "fail";
}

const char* to_string(Profile profile) {
  return profile == Profile::kQuick ? "quick" : "full";
}

Profile parse_profile(const std::string& name) {
  if (name == "quick") return Profile::kQuick;
  if (name == "full") return Profile::kFull;
  throw ValidationError("profile must be 'quick' or 'full' (got '" + name + "')");
}

bool VerificationReport::passed() const {
  return count(CheckStatus::kFail) == 0;
}

int VerificationReport::count(CheckStatus status) const {
  return static_cast<int>(std::count_if(
      checks.begin(), checks.end(),
      [status](const CheckResult& c) { return c.status == status; }));
}

VerificationReport run_verification(Profile profile, std::uint64_t seed) {
  VerificationReport report;
  report.profile = profile;
  report.seed = seed;
  const Context ctx{profile};
  for (const auto& spec : build_checks()) {
    CheckResult result;
    result.name = spec.name;
    result.oracle = spec.oracle;
    if (spec.full_only && profile != Profile::kFull) continue;
    Rng rng(check_seed(seed, spec.name));
    const auto start = std::chrono::steady_clock::now();
    try {
      spec.body(ctx, rng, result);
    } catch (const FeasibilityError& e) {
      result.status = CheckStatus::kSkipped;
      result.detail = e.what();
    } catch (const std::exception& e) {
      result.status = CheckStatus::kFail;
      result.detail = std::string("exception: ") + e.what();
    }
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(result));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["status"] = to_string(c.status);
    item["measured"] = c.measured;
    item["expected"] = c.expected;
    item["tolerance"] = c.tolerance;
    item["oracle"] = c.oracle;
    item["profile"] = to_string(report.profile);
    item["seed"] = report.seed;
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  return checks.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "verification profile=" << to_string(report.profile)
      << " seed=" << report.seed << '\n';
  for (const auto& c : report.checks) {
    char line[512];
    std::snprintf(line, sizeof line, "[%-23s] %-48s measured=%-12.4g tol=%-10.3g %.3fs",
                  to_string(c.status), c.name.c_str(), c.measured, c.tolerance,
                  c.wall_time_s);
    out << line << '\n';
    if (!c.detail.empty() && c.status != CheckStatus::kPass) {
      out << "    " << c.detail << '\n';
    }
  }
  out << report.count(CheckStatus::kPass) << " passed, "
      << report.count(CheckStatus::kFail) << " failed, "
      << report.count(CheckStatus::kSkipped) << " skipped, "
      << report.count(CheckStatus::kKnownDiscrepancy) << " known discrepancies\n";
  return out.str();
}

}  // namespace fortcalc
