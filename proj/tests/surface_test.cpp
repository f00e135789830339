#include "sheetpow/surface.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace sheetpow {
namespace {

constexpr double kPi = std::numbers::pi;

SurfaceSpec surface(std::int64_t p, std::int64_t q) { return SurfaceSpec{RationalExponent{p, q}}; }

RectComplex unit_turn(double turns) { return to_rect({1.0, 2 * kPi * turns}); }

TEST(SurfaceSpecTest, SheetsFollowDenominator) {
  EXPECT_EQ(surface(15, 4).sheets(), 4);
  EXPECT_EQ(surface(5, 2).sheets(), 2);
  EXPECT_EQ(surface(10, 4).sheets(), 2);
  EXPECT_EQ(surface(3, 1).sheets(), 1);
  EXPECT_EQ(surface(5, 2).cut(), BranchCut::kNegativeRealAxis);
}

TEST(TurnTest, HalfOpenConvention) {
  EXPECT_EQ(turn_fraction({-1, 0}), -0.5);
  EXPECT_EQ(turn_fraction({1, 0}), 0.0);
  EXPECT_DOUBLE_EQ(turn_fraction({1, 1}), 0.125);
  EXPECT_LT(turn_fraction({-1, 1e-300}), 0.5);
  EXPECT_EQ(sheet_of_turn(0.5), 1);
  EXPECT_EQ(sheet_of_turn(-0.5), 0);
  EXPECT_EQ(sheet_of_turn(std::nextafter(0.5, 0.0)), 0);
  EXPECT_EQ(reduce_sheet(-1, 4), 3);
  EXPECT_EQ(reduce_sheet(9, 4), 1);
}

TEST(LiftTest, Examples) {
  const SheetedPoint a = lift({1, 1}, 0, surface(5, 2));
  EXPECT_EQ(a.m, 0);
  EXPECT_DOUBLE_EQ(total_turn(a), 0.125);

  EXPECT_EQ(lift({1, 0}, 7, surface(15, 4)), (SheetedPoint{{1, 0}, 3}));

  const SheetedPoint b = lift({-2, 1}, 2, surface(15, 4));
  EXPECT_EQ(b.m, 2);
  // sqrt(5) e^{0.852416 pi i}
  EXPECT_NEAR(total_turn(b), 2 + 0.852416 / 2, 1e-6);
}

TEST(LiftTest, PeriodicInTheSheetCount) {
  const SurfaceSpec surf = surface(8, 3);
  for (std::int64_t m = -7; m <= 7; ++m) {
    EXPECT_EQ(lift({0.3, -2}, m, surf), lift({0.3, -2}, m + 3, surf));
  }
}

TEST(LiftNearTest, NeighbourhoodOfACutPointSpansTwoSheets) {
  // Reference turn 0.5: the point -1 seen from the top of sheet 0.
  EXPECT_EQ(lift_near({-1, 0.01}, 0.5).m, 0);
  EXPECT_EQ(lift_near({-1, -0.01}, 0.5).m, 1);
  EXPECT_EQ(lift_near({1, 0.01}, 3.0).m, 3);
}

TEST(SmulTest, Examples) {
  const SurfaceSpec q2 = surface(5, 2);
  EXPECT_EQ(smul({{1, 0}, 1}, {{1, 0}, 1}, q2), (SheetedPoint{{1, 0}, 0}));
  EXPECT_EQ(smul({{1, 0}, 2}, {{1, 0}, 3}, surface(15, 4)), (SheetedPoint{{1, 0}, 1}));

  // Turns 0.4 + 0.4 = 0.8 lies in [0.5, 1.5).
  const SheetedPoint a{unit_turn(0.4), 0};
  const SheetedPoint prod = smul(a, a, q2);
  EXPECT_EQ(prod.m, 1);
  EXPECT_EQ(prod.z, rect_mul(a.z, a.z));
  EXPECT_NEAR(turn_fraction(prod.z), -0.2, 1e-15);

  // Turns 1/4 + 1/4 = 1/2 is the closed end of sheet 1.
  const SheetedPoint i{{0, 1}, 0};
  const SheetedPoint minus_one = smul(i, i, q2);
  EXPECT_EQ(minus_one.m, 1);
  EXPECT_EQ(minus_one.z, RectComplex(-1, 0));
}

TEST(SpowTest, Examples) {
  const SurfaceSpec s = surface(5, 2);
  EXPECT_EQ(spow({{1, 0}, 0}, s), (SheetedPoint{{1, 0}, 0}));
  EXPECT_EQ(spow({{4, 0}, 0}, s), (SheetedPoint{{32, 0}, 0}));

  // t = 1/4 becomes 5/8, in [1/2, 3/2).
  const SheetedPoint w = spow({{0, 1}, 0}, s);
  EXPECT_EQ(w.m, 1);
  EXPECT_LE(modulus(w.z - to_rect({1.0, 5 * kPi / 4})), 1e-15);
}

TEST(SpowTest, Zero) {
  EXPECT_EQ(spow({{0, 0}, 1}, surface(5, 2)), (SheetedPoint{{0, 0}, 1}));
  EXPECT_THROW(spow({{0, 0}, 1}, surface(-1, 2)), DomainError);
  EXPECT_THROW(spow({{0, 0}, 0}, surface(0, 1)), DomainError);
}

TEST(SpowTest, IntegerExponentMatchesRepeatedProducts) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_int_distribution<std::int64_t> sheet(-3, 3);
  const SurfaceSpec cube = surface(3, 1);
  for (int k = 0; k < 1000; ++k) {
    const SheetedPoint a{{u(rng), u(rng)}, sheet(rng)};
    const SheetedPoint p = spow_unreduced(a, cube);
    const SheetedPoint m = smul_unreduced(smul_unreduced(a, a), a);
    EXPECT_EQ(p.m, m.m);
    EXPECT_LE(modulus(p.z - m.z), 1e-12 * (1 + modulus(m.z)));
  }
}

TEST(SurfacePropertyTest, ProductSheetDriftsByAtMostOne) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (std::int64_t q : {2, 3, 4, 5}) {
    std::uniform_int_distribution<std::int64_t> sheet(0, q - 1);
    for (int k = 0; k < 5000; ++k) {
      const SheetedPoint a{{u(rng), u(rng)}, sheet(rng)};
      const SheetedPoint b{{u(rng), u(rng)}, sheet(rng)};
      const SheetedPoint p = smul_unreduced(a, b);
      EXPECT_LE(std::abs(p.m - (a.m + b.m)), 1);
      EXPECT_EQ(p.z, rect_mul(a.z, b.z));
    }
  }
}

TEST(SurfacePropertyTest, SheetZeroPowerIsThePrincipalPower) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  const SurfaceSpec s = surface(5, 2);
  int compared = 0;
  for (int k = 0; k < 5000; ++k) {
    const SheetedPoint a{{u(rng), u(rng)}, 0};
    const double t = s.exponent().value() * total_turn(a);
    if (t < -0.5 || t >= 0.5) {
      continue;
    }
    ++compared;
    const SheetedPoint w = spow(a, s);
    EXPECT_EQ(w.m, 0);
    EXPECT_EQ(w.z, principal_pow(a.z, 2.5));
  }
  EXPECT_GT(compared, 1000);
}

TEST(SurfacePropertyTest, PowerIsContinuousThroughTheCut) {
  // Walk counter-clockwise across the negative real axis, tracking the sheet.
  const SurfaceSpec s = surface(5, 2);
  const SheetedPoint b{{0.7, 0.4}, 1};
  SheetedPoint prev = lift_near(to_rect({1.3, 0.8 * kPi}), 0.4);
  double prev_pow_turn = total_turn(spow_unreduced(prev, s));
  double prev_mul_turn = total_turn(smul_unreduced(prev, b));
  bool crossed = false;
  constexpr int kSteps = 400;
  const double step = 0.35 * kPi / kSteps;
  for (int k = 1; k <= kSteps; ++k) {
    const SheetedPoint cur = lift_near(to_rect({1.3, 0.8 * kPi + k * step}), total_turn(prev));
    crossed = crossed || cur.m != prev.m;
    const double pow_turn = total_turn(spow_unreduced(cur, s));
    const double mul_turn = total_turn(smul_unreduced(cur, b));
    EXPECT_NEAR(pow_turn - prev_pow_turn, 2.5 * step / (2 * kPi), 1e-9) << k;
    EXPECT_NEAR(mul_turn - prev_mul_turn, step / (2 * kPi), 1e-9) << k;
    prev = cur;
    prev_pow_turn = pow_turn;
    prev_mul_turn = mul_turn;
  }
  EXPECT_TRUE(crossed);
  EXPECT_EQ(prev.m, 1);
}

}  // namespace
}  // namespace sheetpow
