#include "fortcalc/units_params.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "fortcalc/errors.hpp"

namespace fortcalc {
namespace {

TEST(DeriveParams, StamperKurnFrequencies) {
  const auto p = derive_params(3.2e15, 1.9e15, 6.2832e7);
  EXPECT_DOUBLE_EQ(p.detuning, 1.3e15);
  EXPECT_DOUBLE_EQ(p.zsum, 5.1e15);
  EXPECT_EQ(p.detuning, p.omega0 - p.omegaL);
  EXPECT_EQ(p.zsum, p.omega0 + p.omegaL);
}

TEST(DeriveParams, SymmetricCaseHasZeroDetuning) {
  const auto p = derive_params(2.5, 2.5, 0.1);
  EXPECT_EQ(p.detuning, 0.0);
  EXPECT_EQ(p.zsum, 5.0);
  // Accepted here; evaluation stages reject it.
  EXPECT_THROW(require_off_resonance(to_internal(p, BeamProfile{0, 0, 1.0, 1.0})),
               ResonanceError);
}

TEST(DeriveParams, HandArithmetic) {
  const auto p = derive_params(1.0, 0.5, 0.1);
  EXPECT_EQ(p.detuning, 0.5);
  EXPECT_EQ(p.zsum, 1.5);
}

TEST(DeriveParams, RejectsBadInputNamingField) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    derive_params(1.0, -2.0, 1.0);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("omegaL"), std::string::npos);
  }
  EXPECT_THROW(derive_params(nan, 1.0, 1.0), ValidationError);
  EXPECT_THROW(derive_params(1.0, 1.0, 0.0), ValidationError);
  EXPECT_THROW(derive_params(INFINITY, 1.0, 1.0), ValidationError);
}

TEST(ToInternal, DividesByGamma) {
  const auto p = derive_params(8.0, 2.0, 2.0);  // Δ = 6
  const auto in = to_internal(p, BeamProfile{0, 2, 3e-6, 4.0});
  EXPECT_EQ(in.gamma, 1.0);
  EXPECT_EQ(in.detuning, 3.0);
  EXPECT_EQ(in.zsum, 5.0);
  EXPECT_EQ(in.beam.rabi_peak, 2.0);
  EXPECT_EQ(in.beam.waist, 1.0);
  EXPECT_EQ(in.waist_m, 3e-6);
}

TEST(ToInternal, StamperKurnDetuningInGammaUnits) {
  const auto in = to_internal(derive_params(3.2e15, 1.9e15, 6.2832e7),
                              BeamProfile{0, 2, 6e-6, 367 * 6.2832e7});
  EXPECT_NEAR(in.detuning, 1.3e15 / 6.2832e7, 1e-6);
  EXPECT_NEAR(in.detuning, 2.069e7, 0.001e7);
}

TEST(ToInternal, RoundTripIsIdentity) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> freq(1e-3, 1e16);
  for (int i = 0; i < 200; ++i) {
    const auto p = derive_params(freq(gen), freq(gen), freq(gen) * 1e-6);
    const BeamProfile beam{1, 3, 5e-6, freq(gen)};
    const auto [back, back_beam] = to_physical(to_internal(p, beam));
    for (auto [a, b] : {std::pair{back.gamma, p.gamma}, {back.omega0, p.omega0},
                        {back.omegaL, p.omegaL}, {back.detuning, p.detuning},
                        {back.zsum, p.zsum}, {back_beam.rabi_peak, beam.rabi_peak},
                        {back_beam.waist, beam.waist}}) {
      EXPECT_LE(std::abs(a - b), 1e-12 * std::abs(b));
    }
  }
}

TEST(ToInternal, NormalizationIsIdempotent) {
  const auto p = derive_params(3.2e15, 1.9e15, 6.2832e7);
  const auto once = to_internal(p, BeamProfile{0, 2, 6e-6, 2.3e10});
  PhysicalParams as_physical{once.gamma, once.omega0, once.omegaL, once.detuning,
                             once.zsum};
  const auto twice = to_internal(as_physical, once.beam);
  EXPECT_NEAR(twice.detuning, once.detuning, 1e-12 * std::abs(once.detuning));
  EXPECT_NEAR(twice.zsum, once.zsum, 1e-12 * once.zsum);
  EXPECT_NEAR(twice.beam.rabi_peak, once.beam.rabi_peak, 1e-12 * once.beam.rabi_peak);
}

TEST(DeriveParams, ZMinusDeltaIsTwiceLaserFrequency) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> freq(1.0, 1e16);
  for (int i = 0; i < 1000; ++i) {
    const auto p = derive_params(freq(gen), freq(gen), 1.0);
    const double lhs = p.zsum - p.detuning;
    const double rhs = 2.0 * p.omegaL;
    // Cancellation error is measured in ulps of the operands (Z).
    EXPECT_LE(std::abs(lhs - rhs), 4.0 * std::numeric_limits<double>::epsilon() * p.zsum);
    EXPECT_GT(p.zsum, std::abs(p.detuning));
    EXPECT_GT(p.zsum, 0.0);
  }
}

TEST(Presets, StamperKurn) {
  const Preset p = load_preset("stamper_kurn_1998");
  EXPECT_DOUBLE_EQ(p.params.detuning, 1.3e15);
  EXPECT_DOUBLE_EQ(p.params.gamma, 2.0 * kPi * 1e7);
  EXPECT_DOUBLE_EQ(p.beam.rabi_peak, 367.0 * p.params.gamma);
  EXPECT_EQ(p.beam.waist, 6e-6);
  EXPECT_EQ(p.beam.l, 0);
  EXPECT_EQ(p.beam.p, 2);
  EXPECT_EQ(p.phase.phi, 0.0);
  EXPECT_EQ(p.phase.theta0, 0.0);
}

TEST(Presets, LiteralGammaConvention) {
  const Preset p = load_preset("stamper_kurn_1998", GammaConvention::kLiteral);
  EXPECT_EQ(p.params.gamma, 1e7);
  EXPECT_DOUBLE_EQ(p.beam.rabi_peak, 3.67e9);
}

TEST(Presets, DeskSynthetic) {
  const Preset p = load_preset("desk_synthetic");
  const auto in = to_internal(p.params, p.beam);
  EXPECT_EQ(in.detuning, 3.0);
  EXPECT_EQ(in.zsum, 10.0);
  EXPECT_EQ(in.beam.rabi_peak, 2.0);
  EXPECT_EQ(p.beam.l, 0);
  EXPECT_EQ(p.beam.p, 2);
}

TEST(Presets, ChuIsExplicitlyUnavailable) {
  try {
    load_preset("chu_1985");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("preset not available"), std::string::npos);
  }
}

TEST(Presets, UnknownNameListsAvailable) {
  try {
    load_preset("nope");
    FAIL();
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("stamper_kurn_1998"), std::string::npos);
    EXPECT_NE(msg.find("desk_synthetic"), std::string::npos);
  }
}

TEST(DetuningSign, MirrorKeepsZ) {
  const auto p = load_preset("stamper_kurn_1998").params;
  const auto m = with_detuning_sign(p, -1);
  EXPECT_EQ(m.detuning, -p.detuning);
  EXPECT_EQ(m.zsum, p.zsum);
  EXPECT_EQ(with_detuning_sign(p, +1).detuning, p.detuning);
  EXPECT_EQ(with_detuning_sign(m, -1).detuning, m.detuning);
  EXPECT_THROW(with_detuning_sign(p, 0), ValidationError);
}

TEST(ResonanceGuard, RejectsTinyDetuning) {
  auto in = desk_params(3.0, 10.0, 1.0);
  in.detuning = 5e-10;
  EXPECT_THROW(require_off_resonance(in), ResonanceError);
  in.detuning = 2e-9;
  EXPECT_NO_THROW(require_off_resonance(in));
}

TEST(DeskParams, RequiresPositiveFrequencies) {
  EXPECT_THROW(desk_params(5.0, 4.0, 1.0), ValidationError);
  const auto in = desk_params(-3.0, 10.0, 1.0);
  EXPECT_EQ(in.omega0, 3.5);
  EXPECT_EQ(in.omegaL, 6.5);
}

}  // namespace
}  // namespace fortcalc
