#include "sheetpow/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sheetpow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Arg'(z) in [-pi, pi).
double sheet_arg(RectComplex z) {
  if (z.im() == 0.0 && z.re() < 0.0) {
    return -std::numbers::pi;
  }
  return principal_arg(z);
}

}  // namespace

double turn_fraction(RectComplex z) {
  if (z.im() == 0.0 && z.re() < 0.0) {
    return -0.5;
  }
  // atan2 rounds to pi for points within an ulp above the axis.
  return std::min(principal_arg(z) / kTwoPi, std::nextafter(0.5, 0.0));
}

double total_turn(const SheetedPoint& a) {
  return static_cast<double>(a.m) + turn_fraction(a.z);
}

std::int64_t sheet_of_turn(double t) {
  auto m = static_cast<std::int64_t>(std::floor(t + 0.5));
  // t + 0.5 can round up onto the next integer.
  if (static_cast<double>(m) - 0.5 > t) {
    --m;
  }
  return m;
}

std::int64_t reduce_sheet(std::int64_t m, std::int64_t q) {
  const std::int64_t r = m % q;
  return r < 0 ? r + q : r;
}

SheetedPoint lift(RectComplex z, std::int64_t m, const SurfaceSpec& surf) {
  return {z, reduce_sheet(m, surf.sheets())};
}

SheetedPoint lift_near(RectComplex z, double reference_turn) {
  const double xi = turn_fraction(z);
  // xi + k closest to the reference; ties go to the larger turn.
  const double k = std::floor(reference_turn - xi + 0.5);
  return {z, static_cast<std::int64_t>(k)};
}

SheetedPoint smul_unreduced(const SheetedPoint& a, const SheetedPoint& b) {
  return {rect_mul(a.z, b.z), sheet_of_turn(total_turn(a) + total_turn(b))};
}

SheetedPoint smul(const SheetedPoint& a, const SheetedPoint& b, const SurfaceSpec& surf) {
  return canonical(smul_unreduced(a, b), surf);
}

SheetedPoint spow_unreduced(const SheetedPoint& a, const SurfaceSpec& surf) {
  const double alpha = surf.exponent().value();
  if (a.z.is_zero()) {
    if (alpha > 0.0) {
      return {RectComplex{}, a.m};
    }
    throw DomainError("zero raised to a non-positive power");
  }
  // Scaling the angle rather than the turn keeps sheet 0 bit-identical to
  // principal_pow off the cut.
  const double angle = alpha * (sheet_arg(a.z) + kTwoPi * static_cast<double>(a.m));
  const RectComplex value = to_rect({std::pow(modulus(a.z), alpha), angle});
  return {value, sheet_of_turn(angle / kTwoPi)};
}

SheetedPoint spow(const SheetedPoint& a, const SurfaceSpec& surf) {
  return canonical(spow_unreduced(a, surf), surf);
}

}  // namespace sheetpow
