#include "fortcalc/beam_modes.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

namespace fortcalc {
namespace {

// Hand-expanded L_p^a(x), p <= 4. Returns the value; `scale` gets the sum of
// |monomials| (the conditioning scale for comparisons near roots).
double explicit_laguerre(int p, double a, double x, double* scale) {
  double terms[5] = {0, 0, 0, 0, 0};
  switch (p) {
    case 0: terms[0] = 1; break;
    case 1: terms[0] = -x; terms[1] = a + 1; break;
    case 2:
      terms[0] = x * x / 2; terms[1] = -(a + 2) * x; terms[2] = (a + 1) * (a + 2) / 2;
      break;
    case 3:
      terms[0] = -x * x * x / 6; terms[1] = (a + 3) * x * x / 2;
      terms[2] = -(a + 2) * (a + 3) * x / 2; terms[3] = (a + 1) * (a + 2) * (a + 3) / 6;
      break;
    case 4:
      terms[0] = x * x * x * x / 24; terms[1] = -(a + 4) * x * x * x / 6;
      terms[2] = (a + 3) * (a + 4) * x * x / 4;
      terms[3] = -(a + 2) * (a + 3) * (a + 4) * x / 6;
      terms[4] = (a + 1) * (a + 2) * (a + 3) * (a + 4) / 24;
      break;
  }
  double v = 0, s = 0;
  for (double t : terms) { v += t; s += std::abs(t); }
  *scale = s;
  return v;
}

TEST(AssocLaguerre, DegreeZeroIsOne) {
  for (int alpha : {0, 1, 5}) {
    for (double x : {-3.0, 0.0, 0.7, 40.0}) EXPECT_EQ(assoc_laguerre(0, alpha, x), 1.0);
  }
}

TEST(AssocLaguerre, ValueAtOriginForAlphaZero) {
  EXPECT_EQ(assoc_laguerre(2, 0, 0.0), 1.0);
  EXPECT_EQ(assoc_laguerre(4, 0, 0.0), 1.0);
}

TEST(AssocLaguerre, HandValue) {
  // 1 − 2x + x²/2 at x = 2.
  EXPECT_DOUBLE_EQ(assoc_laguerre(2, 0, 2.0), -1.0);
}

TEST(AssocLaguerre, RootsOfL2) {
  const double s = std::sqrt(2.0);
  EXPECT_NEAR(assoc_laguerre(2, 0, 2.0 - s), 0.0, 1e-14);
  EXPECT_NEAR(assoc_laguerre(2, 0, 2.0 + s), 0.0, 1e-14);
}

TEST(AssocLaguerre, RecurrenceMatchesExplicitPolynomials) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> xs(0.0, 12.0);
  for (int p = 0; p <= 4; ++p) {
    for (int alpha = 0; alpha <= 4; ++alpha) {
      for (int k = 0; k < 50; ++k) {
        const double x = xs(gen);
        double scale = 0;
        const double ref = explicit_laguerre(p, alpha, x, &scale);
        EXPECT_LE(std::abs(assoc_laguerre(p, alpha, x) - ref), 1e-13 * scale)
            << "p=" << p << " alpha=" << alpha << " x=" << x;
      }
    }
  }
}

TEST(AssocLaguerre, AgreesWithStandardLibrary) {
  for (int p = 0; p <= 8; ++p) {
    for (int alpha = 0; alpha <= 3; ++alpha) {
      for (double x : {0.1, 1.3, 4.0, 9.5}) {
        const double ref = std::assoc_laguerre(p, alpha, x);
        EXPECT_NEAR(assoc_laguerre(p, alpha, x), ref, 1e-12 * std::max(1.0, std::abs(ref)));
      }
    }
  }
}

TEST(AssocLaguerre, NegativeIndicesAreDomainErrors) {
  EXPECT_THROW(assoc_laguerre(-1, 0, 1.0), std::domain_error);
  EXPECT_THROW(assoc_laguerre(2, -1, 1.0), std::domain_error);
}

TEST(RabiProfile, OnAxisAnchor) {
  const BeamProfile beam{0, 2, 1.0, 3.67};
  EXPECT_EQ(rabi_profile(0.0, beam), 3.67);
}

TEST(RabiProfile, ZeroAtFirstRingForLg02) {
  const BeamProfile beam{0, 2, 1.0, 5.0};
  const double r = std::sqrt((2.0 - std::sqrt(2.0)) / 2.0);
  EXPECT_NEAR(r, 0.5412, 1e-4);
  EXPECT_NEAR(rabi_profile(r, beam), 0.0, 1e-12 * 5.0);
}

TEST(RabiProfile, WaistScalesRadius) {
  const BeamProfile unit{1, 1, 1.0, 2.0};
  const BeamProfile wide{1, 1, 6e-6, 2.0};
  EXPECT_DOUBLE_EQ(rabi_profile(0.7 * 6e-6, wide), rabi_profile(0.7, unit));
  EXPECT_DOUBLE_EQ(rabi_gradient(0.7 * 6e-6, wide) * 6e-6, rabi_gradient(0.7, unit));
}

TEST(RabiProfile, VortexCore) {
  EXPECT_EQ(rabi_profile(0.0, BeamProfile{1, 0, 1.0, 1.0}), 0.0);
  EXPECT_EQ(rabi_profile(0.0, BeamProfile{-2, 1, 1.0, 1.0}), 0.0);
}

TEST(RabiProfile, SignedBetweenRings) {
  const BeamProfile beam{0, 2, 1.0, 1.0};
  EXPECT_GT(rabi_profile(0.2, beam), 0.0);
  EXPECT_LT(rabi_profile(0.9, beam), 0.0);
  EXPECT_GT(rabi_profile(1.6, beam), 0.0);
}

TEST(RabiProfile, ZeroCountMatchesRadialIndex) {
  for (int p = 0; p <= 4; ++p) {
    const BeamProfile beam{0, p, 1.0, 1.0};
    int changes = 0;
    double prev = rabi_profile(1e-3, beam);
    for (int i = 2; i <= 8000; ++i) {
      const double v = rabi_profile(i * 1e-3, beam);
      changes += (v > 0) != (prev > 0);
      prev = v;
    }
    EXPECT_EQ(changes, p);
  }
}

TEST(RabiGradient, ZeroOnAxisForLZero) {
  for (int p = 0; p <= 4; ++p) EXPECT_EQ(rabi_gradient(0.0, BeamProfile{0, p, 1.0, 2.0}), 0.0);
}

TEST(RabiGradient, VortexSlopeAtOrigin) {
  // d/dr [Ω0 √2 (r/w0) e^{−r²/w0²}] at 0 = √2 Ω0/w0.
  const BeamProfile beam{1, 0, 2.0, 3.0};
  EXPECT_DOUBLE_EQ(rabi_gradient(0.0, beam), std::sqrt(2.0) * 3.0 / 2.0);
}

TEST(RabiGradient, NonzeroAtRingZeroAndMatchesDifference) {
  const BeamProfile beam{0, 2, 1.0, 1.0};
  const double r = std::sqrt((2.0 - std::sqrt(2.0)) / 2.0);
  const double h = 1e-5;
  const double g = rabi_gradient(r, beam);
  const double cd = (rabi_profile(r + h, beam) - rabi_profile(r - h, beam)) / (2 * h);
  EXPECT_GT(std::abs(g), 0.1);
  EXPECT_NEAR(g, cd, 1e-8 * std::abs(g));
}

TEST(RabiGradient, PropertyMatchesCentralDifference) {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<int> ls(0, 2), ps(0, 4);
  std::uniform_real_distribution<double> rs(0.0, 3.0);
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const BeamProfile beam{ls(gen), ps(gen), 1.0, 1.0};
    const double r = rs(gen);
    const double g = rabi_gradient(r, beam);
    const double cd = (rabi_profile(r + h, beam) - rabi_profile(r - h, beam)) / (2 * h);
    EXPECT_LE(std::abs(g - cd) / std::max(std::abs(g), 1e-12), 1e-6)
        << "l=" << beam.l << " p=" << beam.p << " r=" << r;
  }
}

TEST(BeamValidation, RejectsBadFields) {
  EXPECT_THROW(validate(BeamProfile{0, -1, 1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(validate(BeamProfile{0, 0, 0.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(validate(BeamProfile{0, 0, 1.0, -1.0}), std::invalid_argument);
}

}  // namespace
}  // namespace fortcalc
