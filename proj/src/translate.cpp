#include "sheetpow/translate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace sheetpow {

Quadrant quadrant(RectComplex z) {
  if (z.im() >= 0.0) {
    return z.re() > 0.0 ? Quadrant::kI : Quadrant::kII;
  }
  return z.re() > 0.0 ? Quadrant::kIV : Quadrant::kIII;
}

std::string_view to_string(Quadrant q) {
  switch (q) {
    case Quadrant::kI:
      return "QI";
    case Quadrant::kII:
      return "QII";
    case Quadrant::kIII:
      return "QIII";
    case Quadrant::kIV:
      return "QIV";
  }
  return "?";
}

CccDecision ccc_decide(RectComplex z, RectComplex c) {
  const double xc = c.re(), yc = c.im();
  const double abs_xc = std::abs(xc), abs_yc = std::abs(yc);
  const double abs_xz = std::abs(z.re()), abs_yz = std::abs(z.im());
  const Quadrant qz = quadrant(z);

  if (xc == 0.0) {
    if (yc == 0.0) {
      return {0, "1(a)"};
    }
    if (yc > 0.0) {
      if (qz != Quadrant::kIII) {
        return {0, "1(b)"};
      }
      if (abs_yc <= abs_yz) {
        return {0, "1(b)(i)"};
      }
      return {-1, "1(b)(ii)"};
    }
    if (qz != Quadrant::kII) {
      return {0, "1(c)"};
    }
    if (abs_yc < abs_yz) {
      return {0, "1(c)(i)"};
    }
    return {+1, "1(c)(ii)"};
  }

  if (xc > 0.0) {
    if (yc == 0.0) {
      return {0, "2(a)"};
    }
    if (yc > 0.0) {
      if (qz != Quadrant::kIII) {
        return {0, "2(b)"};
      }
      if (abs_yc <= abs_yz) {
        return {0, "2(b)(i)"};
      }
      if (abs_xc >= abs_xz) {
        return {0, "2(b)(ii)"};
      }
      return {-1, "2(b)(iii)"};
    }
    if (qz != Quadrant::kII) {
      return {0, "2(c)"};
    }
    if (abs_yc < abs_yz) {
      return {0, "2(c)(i)"};
    }
    if (abs_xc >= abs_xz) {
      return {0, "2(c)(ii)"};
    }
    return {+1, "2(c)(iii)"};
  }

  if (yc == 0.0) {
    return {0, "3(a)"};
  }
  if (yc > 0.0) {
    switch (qz) {
      case Quadrant::kI:
      case Quadrant::kII:
        return {0, "3(b)(i)"};
      case Quadrant::kIII:
        return abs_yc <= abs_yz ? CccDecision{0, "3(b)(ii)"} : CccDecision{-1, "3(b)(ii)"};
      case Quadrant::kIV:
        if (abs_xc <= abs_xz) {
          return {0, "3(b)(iii)(A)"};
        }
        if (abs_yc <= abs_yz) {
          return {0, "3(b)(iii)(B)"};
        }
        return {-1, "3(b)(iii)(C)"};
    }
  }
  switch (qz) {
    case Quadrant::kIII:
    case Quadrant::kIV:
      return {0, "3(c)(i)"};
    case Quadrant::kII:
      return abs_yc < abs_yz ? CccDecision{0, "3(c)(ii)"} : CccDecision{+1, "3(c)(ii)"};
    case Quadrant::kI:
      if (abs_xc <= abs_xz) {
        return {0, "3(c)(iii)(A)"};
      }
      if (abs_yc < abs_yz) {
        return {0, "3(c)(iii)(B)"};
      }
      return {+1, "3(c)(iii)(C)"};
  }
  return {0, "unreachable"};
}

SheetedPoint add_ccc_unreduced(const SheetedPoint& a, RectComplex c) {
  return {a.z + c, a.m + ccc_decide(a.z, c).adjustment};
}

SheetedPoint add_ccc(const SheetedPoint& a, RectComplex c, const SurfaceSpec& surf) {
  return canonical(add_ccc_unreduced(a, c), surf);
}

namespace {

std::int64_t floor_half(std::int64_t n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

}  // namespace

SheetedPoint add_general_unreduced(const SheetedPoint& a, const SheetedPoint& b) {
  const RectComplex w = a.z + b.z;
  const std::int64_t base = floor_half(a.m + b.m);
  if (w.is_zero()) {
    return {w, base};
  }
  return {w, base + ccc_decide(a.z, b.z).adjustment};
}

SheetedPoint add_general(const SheetedPoint& a, const SheetedPoint& b, const SurfaceSpec& surf) {
  return canonical(add_general_unreduced(a, b), surf);
}

SheetedPoint add_sign_unreduced(const SheetedPoint& a, const SheetedPoint& b) {
  const double y = b.z.im();
  const std::int64_t step = y > 0.0 ? 1 : (y < 0.0 ? -1 : 0);
  return {a.z + b.z, a.m + b.m + step};
}

SheetedPoint add_sign(const SheetedPoint& a, const SheetedPoint& b, const SurfaceSpec& surf) {
  return canonical(add_sign_unreduced(a, b), surf);
}

namespace {

// Sign of the cross product c x z: which side of the line through 0 and c.
bool left_of_ray(RectComplex c, RectComplex z) {
  return c.re() * z.im() - c.im() * z.re() > 0.0;
}

std::vector<RectComplex> stratified_disk(RectComplex center, double radius, std::size_t n,
                                         std::uint64_t seed) {
  constexpr std::size_t kSectors = 16;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<RectComplex> points;
  points.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double sector = static_cast<double>(k % kSectors);
    const double angle = 2.0 * std::numbers::pi * (sector + unit(rng)) / kSectors;
    const double rho = radius * std::sqrt(unit(rng));
    points.push_back(center + to_rect({rho, angle}));
  }
  return points;
}

}  // namespace

ShearEvidence probe_discontinuity(RectComplex c, const SurfaceSpec& surf,
                                  const ProbeOptions& options) {
  if (c.is_zero()) {
    throw DegenerateInput("translation by zero cannot shear");
  }
  if (c.im() == 0.0) {
    throw DegenerateInput("translation along the real axis never changes sheets");
  }
  if (surf.sheets() < 2) {
    throw DegenerateInput("a single-sheeted surface has no shear");
  }
  if (!(options.epsilon > 0.0) || !(options.epsilon < modulus(c) / 2.0)) {
    throw DegenerateInput("epsilon must lie in (0, |c|/2)");
  }
  if (options.samples < 2) {
    throw DegenerateInput("at least two samples are required");
  }

  const std::int64_t sheet = reduce_sheet(options.input_sheet, surf.sheets());
  for (const double scale : {0.5, 1.0}) {
    const RectComplex z0{-scale * c.re(), -scale * c.im()};
    ShearEvidence ev;
    ev.z0 = z0;
    ev.epsilon = options.epsilon;
    ev.c = c;
    ev.input_sheet = sheet;
    std::size_t moved = 0;
    std::int64_t other = sheet;
    for (const RectComplex z : stratified_disk(z0, options.epsilon, options.samples, options.seed)) {
      const SheetedPoint out = add_ccc({z, sheet}, c, surf);
      if (out.m != sheet) {
        ++moved;
        other = out.m;
      }
      ev.samples.push_back({z, out.m});
    }
    if (moved == 0 || moved == ev.samples.size()) {
      continue;
    }
    ev.sheet_labels = {std::min(sheet, other), std::max(sheet, other)};
    ev.split_fraction = static_cast<double>(moved) / static_cast<double>(ev.samples.size());

    // Consistent when each side of the line through 0 and c lands on one sheet.
    std::array<std::int64_t, 2> side_sheet{-1, -1};
    ev.split_by_ray = true;
    for (const ProbeSample& s : ev.samples) {
      const std::size_t side = left_of_ray(c, s.input) ? 1 : 0;
      if (side_sheet[side] < 0) {
        side_sheet[side] = s.out_sheet;
      } else if (side_sheet[side] != s.out_sheet) {
        ev.split_by_ray = false;
      }
    }
    if (side_sheet[0] == side_sheet[1]) {
      ev.split_by_ray = false;
    }
    return ev;
  }
  throw ProbeFailed("translated disk stayed on a single sheet");
}

}  // namespace sheetpow
