#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "sheetpow/polar.hpp"
#include "sheetpow/surface.hpp"

namespace sheetpow {

/// Quadrants with the boundary assignment used by the sheet-choosing rules:
///   I = {Re > 0, Im >= 0}, II = {Re <= 0, Im >= 0},
///   III = {Re <= 0, Im < 0}, IV = {Re > 0, Im < 0}.
/// Zero falls in II.
enum class Quadrant { kI, kII, kIII, kIV };

Quadrant quadrant(RectComplex z);
std::string_view to_string(Quadrant q);

/// Outcome of the counter-clockwise-continuity case tree for z + c: the
/// sheet adjustment (-1, 0 or +1) and the label of the deciding case,
/// e.g. "3(c)(ii)".
struct CccDecision {
  int adjustment = 0;
  std::string_view rule;
};

CccDecision ccc_decide(RectComplex z, RectComplex c);

/// (z, m) + (c, 0) with the sheet chosen by the counter-clockwise-continuity
/// rules. The value is the plain rectangular sum.
SheetedPoint add_ccc_unreduced(const SheetedPoint& a, RectComplex c);
SheetedPoint add_ccc(const SheetedPoint& a, RectComplex c, const SurfaceSpec& surf);

/// (z1, m1) + (z2, m2): base sheet floor((m1 + m2) / 2), adjusted by the same
/// case tree with z1 in the role of z and z2 in the role of c. A zero sum
/// keeps the base sheet. Not commutative in the sheet.
SheetedPoint add_general_unreduced(const SheetedPoint& a, const SheetedPoint& b);
SheetedPoint add_general(const SheetedPoint& a, const SheetedPoint& b, const SurfaceSpec& surf);

/// (z, m1) + (c, m2) with m* = m1 + m2 + sign(Im c).
SheetedPoint add_sign_unreduced(const SheetedPoint& a, const SheetedPoint& b);
SheetedPoint add_sign(const SheetedPoint& a, const SheetedPoint& b, const SurfaceSpec& surf);

class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ProbeFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProbeSample {
  RectComplex input;
  std::int64_t out_sheet = 0;
};

/// A witness that translating a connected disk splits it across two sheets.
struct ShearEvidence {
  RectComplex z0;
  double epsilon = 0.0;
  RectComplex c;
  std::int64_t input_sheet = 0;
  /// The two (canonical) output sheets, ascending.
  std::array<std::int64_t, 2> sheet_labels{};
  /// Fraction of samples that left the input sheet; strictly in (0, 1).
  double split_fraction = 0.0;
  /// True when the line through 0 and c separates the two output sheets.
  bool split_by_ray = false;
  std::vector<ProbeSample> samples;
};

struct ProbeOptions {
  double epsilon = 0.0;
  std::size_t samples = 1024;
  std::uint64_t seed = 0;
  std::int64_t input_sheet = 1;
};

/// Samples a disk of radius epsilon about a point z0 with 0 on the segment
/// [z0, z0 + c], translates every sample by (c, 0) with `add_ccc`, and reports
/// the two output sheets. z0 = -c/2 is tried first; when the case tree leaves
/// that disk on one sheet, z0 = -c (whose translate is exactly 0) is used.
///
/// Throws DegenerateInput for real c (the case tree never changes sheets on
/// horizontal moves), c = 0, a single-sheeted surface, or epsilon outside
/// (0, |c|/2). Throws ProbeFailed if no shear is found.
ShearEvidence probe_discontinuity(RectComplex c, const SurfaceSpec& surf,
                                  const ProbeOptions& options);

}  // namespace sheetpow
