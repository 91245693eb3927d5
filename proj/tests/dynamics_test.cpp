#include "fortcalc/dynamics.hpp"

#include <cmath>
#include <complex>
#include <random>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gtest/gtest.h>

#include "fortcalc/errors.hpp"
#include "fortcalc/potentials.hpp"

namespace fortcalc {
namespace {

using Hp = boost::multiprecision::cpp_dec_float_50;

// Momentum brace re-derived in 50-digit arithmetic for a phase factor e^{iθ}.
double momentum_brace_hp(double delta_d, double z_d, double t_d, double theta_d) {
  const Hp delta(delta_d), z(z_d), t(t_d), theta(theta_d);
  const Hp dz = delta - z;
  const Hp rot = -2 * sin(delta * t) / (delta * delta) + 2 * t / delta;
  const Hp counter = 2 * sin(z * t) / (z * z) - 2 * t / z;
  // Re[(cosθ + i sinθ)(a + i b)] = a cosθ − b sinθ
  const Hp a = sin(dz * t) / (z * dz) + t / z;
  const Hp b = cos(dz * t) / (z * dz);
  const Hp phase_term = 4 * (a * cos(theta) - b * sin(theta));
  return static_cast<double>(rot + counter + phase_term);
}

TEST(PhaseFactor, DefaultIsExactlyOne) {
  const auto c = phase_factor({});
  EXPECT_EQ(c.real(), 1.0);
  EXPECT_EQ(c.imag(), 0.0);
  const auto d = phase_factor({kPi / 8, kPi / 8});
  EXPECT_NEAR(d.real(), 0.0, 1e-15);
  EXPECT_NEAR(d.imag(), 1.0, 1e-15);
}

TEST(ModifiedLinewidth, ReducesToGammaWithoutField) {
  EXPECT_EQ(modified_linewidth(1.0, 0.0), 1.0);
  EXPECT_EQ(modified_linewidth(0.37, 0.0), 0.37);
}

TEST(ModifiedLinewidth, HandValue) {
  EXPECT_NEAR(modified_linewidth(2.0, std::sqrt(2.0)), 2.0 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(modified_linewidth(2.0, std::sqrt(2.0)), 2.8284271, 1e-7);
}

TEST(ModifiedLinewidth, SquaredIdentityWithinFourUlp) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> gs(0.1, 10.0), ws(0.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double g = gs(gen), w = ws(gen);
    const double gp = modified_linewidth(g, w);
    const double rhs = g * g + 2 * w * w;
    const double ulp = std::nextafter(rhs, INFINITY) - rhs;
    EXPECT_LE(std::abs(gp * gp - rhs), 4 * ulp) << g << ' ' << w;
  }
}

TEST(MomentumCoefficient, VanishesAtZeroForRealPhase) {
  const auto p = desk_params(3.0, 10.0, 1.0);
  EXPECT_EQ(momentum_coefficient(0.0, p, {}).value, 0.0);
}

TEST(MomentumCoefficient, ComplexPhaseLeavesConstantAtZero) {
  // Re[c·i/(Z(Δ−Z))] survives when c is complex.
  const auto p = desk_params(3.0, 10.0, 1.0);
  const PhaseConfig phase{kPi / 8, 0.0};
  const double expected = -4.0 * std::sin(kPi / 4) / (10.0 * -7.0);
  EXPECT_NEAR(momentum_coefficient(0.0, p, phase).value, expected, 1e-15);
}

TEST(MomentumCoefficient, MatchesHighPrecisionOracle) {
  const auto p = desk_params(3.0, 10.0, 1.0);
  const double ref = momentum_brace_hp(3.0, 10.0, 1.0, 0.0);
  EXPECT_NEAR(momentum_coefficient(1.0, p, {}).value, ref, 1e-12 * std::abs(ref));
  const double ref_c = momentum_brace_hp(-2.5, 13.0, 0.77, 2 * 0.3 + 2 * 1.1);
  const auto q = desk_params(-2.5, 13.0, 1.0);
  EXPECT_NEAR(momentum_coefficient(0.77, q, {0.3, 1.1}).value, ref_c, 1e-12 * std::abs(ref_c));
}

TEST(MomentumCoefficient, SecularSlope) {
  const auto p = desk_params(3.0, 10.0, 1.0);
  const int n = 2001;
  double st = 0, sc = 0, stt = 0, stc = 0;
  for (int i = 0; i < n; ++i) {
    const double t = (100.0 + 100.0 * i / (n - 1)) / 3.0;
    const double c = momentum_coefficient(t, p, {}).value;
    st += t; sc += c; stt += t * t; stc += t * c;
  }
  const double slope = (n * stc - st * sc) / (n * stt - st * st);
  const double expected = 2.0 / 3.0 - 2.0 / 10.0 + 4.0 / 10.0;
  EXPECT_NEAR(slope, expected, 1e-3 * expected);
}

TEST(ForceCoefficient, ValueAtZero) {
  const auto p = desk_params(3.0, 10.0, 1.0);
  EXPECT_DOUBLE_EQ(force_coefficient(0.0, p, {}).value, 0.8);
}

TEST(ForceCoefficient, RwaLimitForLargeZ) {
  const auto p = desk_params(3.0, 1e12, 1.0);
  for (double t : {0.0, 0.3, 1.7, 9.1}) {
    const double s = std::sin(1.5 * t);
    EXPECT_NEAR(force_coefficient(t, p, {}).value, 4 * s * s / 3.0, 1e-10);
  }
}

TEST(ForceCoefficient, TogglesZeroDisabledTerms) {
  const auto p = desk_params(3.0, 10.0, 1.0);
  const auto all = force_coefficient(0.4, p, {});
  const auto only1 = force_coefficient(0.4, p, {}, TermToggles::rwa_only());
  EXPECT_EQ(only1.value, all.term1);
  EXPECT_EQ(only1.term2, 0.0);
  EXPECT_EQ(only1.term3, 0.0);
  EXPECT_EQ(all.value, all.term1 + all.term2 + all.term3);
}

TEST(ForceCoefficient, IsTimeDerivativeOfMomentum) {
  const auto p = desk_params(3.0, 10.0, 1.0);
  const double h = 1e-6 / 3.0;
  for (double s : {0.1, 0.7, 2.3}) {
    const double t = s / 3.0;
    const double cd =
        (momentum_coefficient(t + h, p, {}).value - momentum_coefficient(t - h, p, {}).value) /
        (2 * h);
    const double f = force_coefficient(t, p, {}).value;
    EXPECT_NEAR(cd, f, 1e-6 * std::abs(f)) << "t = " << t;
  }
}

TEST(ForceCoefficient, BoundedByTriangleInequality) {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> ds(1.0, 5.0), zs(8.0, 20.0), ph(0.0, kPi);
  for (int i = 0; i < 20; ++i) {
    const auto p = desk_params((i % 2 ? -1 : 1) * ds(gen), zs(gen), 1.0);
    const PhaseConfig phase{ph(gen), ph(gen)};
    const double bound = 4 / std::abs(p.detuning) + 4 / p.zsum + 12 / p.zsum;
    for (int k = 0; k <= 400; ++k) {
      EXPECT_LE(std::abs(force_coefficient(0.025 * k, p, phase).value), bound);
    }
  }
}

TEST(ForceCoefficient, ResonanceGuards) {
  auto p = desk_params(3.0, 10.0, 1.0);
  p.detuning = 0.0;
  EXPECT_THROW(force_coefficient(1.0, p, {}), ResonanceError);
  EXPECT_THROW(momentum_coefficient(1.0, p, {}), ResonanceError);
  p = desk_params(3.0, 10.0, 1.0);
  p.zsum = p.detuning;
  EXPECT_THROW(momentum_coefficient(1.0, p, {}), ResonanceError);
}

TEST(AveragedNumeric, RwaHandAntiderivative) {
  // ∫ e^{−t} (4/3) sin²(3t/2) dt = 2Δ/(1 + Δ²) = 0.6.
  const auto p = desk_params(3.0, 10.0, 0.0);
  const auto avg = averaged_coefficient_numeric(p, 0.0, {}, TermToggles::rwa_only());
  EXPECT_NEAR(avg.value, 0.6, 1e-9);
  EXPECT_EQ(avg.linewidth, 1.0);
  EXPECT_EQ(avg.horizon, 40.0);
  EXPECT_LT(avg.truncation_bound, 1e-16);
}

TEST(AveragedNumeric, MatchesClosedFormAtDeskScale) {
  for (double delta : {3.0, -3.0}) {
    for (double rabi : {0.5, 2.0}) {
      const auto p = desk_params(delta, 10.0, rabi);
      const double num = averaged_coefficient_numeric(p, rabi, {}).value;
      const double closed = averaged_coefficient_closed(rabi, p, {});
      EXPECT_NEAR(num, closed, 1e-6 * std::abs(closed)) << delta << ' ' << rabi;
    }
  }
}

TEST(AveragedNumeric, RwaReductionWithBroadening) {
  const auto p = desk_params(-2.0, 12.0, 1.5);
  const double num = averaged_coefficient_numeric(p, 1.5, {}, TermToggles::rwa_only()).value;
  EXPECT_NEAR(num, 2 * -2.0 / (4.0 + 1.0 + 2 * 2.25), 1e-9);
}

TEST(AveragedNumeric, InvariantUnderThetaShiftByPi) {
  const auto p = desk_params(3.0, 10.0, 2.0);
  const double a = averaged_coefficient_numeric(p, 2.0, {0.2, 0.4}).value;
  const double b = averaged_coefficient_numeric(p, 2.0, {0.2, 0.4 + kPi}).value;
  EXPECT_NEAR(a, b, 1e-12 * std::abs(a));
}

TEST(AveragedNumeric, FeasibilityGuardAtTrueScale) {
  const Preset sk = load_preset("stamper_kurn_1998");
  const auto p = to_internal(sk.params, sk.beam);
  // Unbroadened, max(|Δ|, Z)/Γ′ ≈ 8e7 is far beyond the oracle guard.
  EXPECT_THROW(averaged_coefficient_numeric(p, 0.0, {}), FeasibilityError);
  auto q = desk_params(3.0, 2.5e6, 0.0);
  EXPECT_THROW(averaged_coefficient_numeric(q, 0.0, {}), FeasibilityError);
}

TEST(AveragedNumeric, ReportsUnreachableTolerance) {
  const auto p = desk_params(3.0, 10.0, 2.0);
  try {
    averaged_coefficient_numeric(p, 2.0, {}, {}, 1e-30);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_NEAR(e.estimate(), averaged_coefficient_closed(2.0, p, {}), 1e-9);
    EXPECT_GT(e.error(), 0.0);
  }
}

}  // namespace
}  // namespace fortcalc
