#pragma once

#include <cstdint>

#include "sheetpow/multivalued.hpp"
#include "sheetpow/polar.hpp"

namespace sheetpow {

enum class BranchCut { kNegativeRealAxis };

/// The q-sheeted surface for alpha = p/q: q slit planes glued along the
/// negative real axis, sheet q-1 rejoining sheet 0.
class SurfaceSpec {
 public:
  explicit SurfaceSpec(RationalExponent exponent) : exponent_(exponent) {}

  [[nodiscard]] RationalExponent exponent() const { return exponent_; }
  [[nodiscard]] std::int64_t sheets() const { return exponent_.q(); }
  [[nodiscard]] BranchCut cut() const { return BranchCut::kNegativeRealAxis; }

 private:
  RationalExponent exponent_;
};

/// A point of the surface: a complex value and a sheet index. Canonical
/// points have 0 <= m < q; intermediate results may carry any integer m.
struct SheetedPoint {
  RectComplex z;
  std::int64_t m = 0;

  friend bool operator==(const SheetedPoint&, const SheetedPoint&) = default;
};

/// In-sheet angle in turns, Arg'(z) / 2pi with Arg' in [-pi, pi). The
/// negative real axis belongs to the bottom edge of a sheet: xi(-1) = -1/2.
double turn_fraction(RectComplex z);

/// Total turn t = m + xi.
double total_turn(const SheetedPoint& a);

/// The unique integer m with t in [m - 1/2, m + 1/2).
std::int64_t sheet_of_turn(double t);

/// Euclidean residue of m modulo q, always in [0, q).
std::int64_t reduce_sheet(std::int64_t m, std::int64_t q);

inline SheetedPoint canonical(SheetedPoint a, const SurfaceSpec& surf) {
  return {a.z, reduce_sheet(a.m, surf.sheets())};
}

/// (z, m) with m reduced modulo the sheet count.
SheetedPoint lift(RectComplex z, std::int64_t m, const SurfaceSpec& surf);

/// Places z on the sheet whose total turn lies closest to `reference_turn`.
/// This is how a small surface neighbourhood of a point looks in (z, m)
/// coordinates: near the cut, its two halves sit on adjacent sheets.
/// The sheet is not reduced.
SheetedPoint lift_near(RectComplex z, double reference_turn);

/// Product with total turns added: t1 + t2 in [m* - 1/2, m* + 1/2).
SheetedPoint smul_unreduced(const SheetedPoint& a, const SheetedPoint& b);
SheetedPoint smul(const SheetedPoint& a, const SheetedPoint& b, const SurfaceSpec& surf);

/// (z, m)^alpha: total turn scaled by alpha, sheet by the same bucketing.
/// Zero maps to (0, m) for alpha > 0; throws DomainError for alpha <= 0.
SheetedPoint spow_unreduced(const SheetedPoint& a, const SurfaceSpec& surf);
SheetedPoint spow(const SheetedPoint& a, const SurfaceSpec& surf);

}  // namespace sheetpow
