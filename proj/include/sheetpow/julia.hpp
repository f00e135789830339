#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sheetpow/multivalued.hpp"
#include "sheetpow/polar.hpp"
#include "sheetpow/surface.hpp"

namespace sheetpow {

/// A real exponent, optionally known exactly as p/q. The sheet-tracking
/// iteration modes need the exact form to build the surface.
struct Exponent {
  double value = 2.5;
  std::optional<RationalExponent> exact;

  Exponent() = default;
  Exponent(double v) : value(v) {}  // NOLINT
  Exponent(RationalExponent e) : value(e.value()), exact(e) {}  // NOLINT
};

enum class IterationMode { kPrincipal, kCcc, kSign };

/// Parameters of an escape-time render of f(z) = z^alpha + c. Defaults
/// follow the julzpower setup: alpha 2.5, c = 0.5i, modulus bailout 4.
struct RenderConfig {
  Exponent alpha{2.5};
  RectComplex c{0.0, 0.5};
  double x_min = -2.0;
  double x_max = 2.0;
  double y_min = -2.0;
  double y_max = 2.0;
  std::uint32_t width = 512;
  std::uint32_t height = 512;
  std::uint32_t max_iter = 256;
  /// Escape once re^2 + im^2 > bailout.
  double bailout = 4.0;
  IterationMode mode = IterationMode::kPrincipal;

  /// Throws std::invalid_argument on an empty view, zero-sized raster,
  /// non-positive bailout, or a sheet mode without an exact exponent.
  void validate() const;
};

/// Row-major escape counts; a count equal to max_iter means the orbit never
/// escaped.
struct EscapeGrid {
  RenderConfig config;
  std::vector<std::uint32_t> counts;

  [[nodiscard]] std::uint32_t at(std::uint32_t i, std::uint32_t j) const {
    return counts[static_cast<std::size_t>(j) * config.width + i];
  }
};

/// Complex coordinate of the centre of pixel (i, j); row 0 is at y_max.
RectComplex pixel_center(const RenderConfig& cfg, std::uint32_t i, std::uint32_t j);

/// First n in [0, max_iter] with |z_n|^2 > bailout, else max_iter.
std::uint32_t iterate_point(RectComplex z0, const RenderConfig& cfg);

/// Fills the raster, splitting rows over `threads` workers (0 picks the
/// hardware concurrency). The result does not depend on the thread count.
EscapeGrid render(const RenderConfig& cfg, unsigned threads = 0);

enum class DiskStage { kInput, kLog, kScaled, kExp };
enum class DiskHalf { kUpper, kLower };

const char* to_string(DiskStage stage);
const char* to_string(DiskHalf half);

/// Boundary samples of one half of the disk |z + r| < eps at one stage of
/// z -> Log z -> alpha Log z -> exp(alpha Log z). points[0, edge_begin) lie
/// on the arc, points[edge_begin, end) on the cut edge (the diameter along
/// the negative real axis). The lower half is open at the axis, so its edge
/// is sampled as the limit from below, with argument -pi.
struct DiskTrace {
  DiskStage stage = DiskStage::kInput;
  DiskHalf half = DiskHalf::kUpper;
  std::vector<RectComplex> points;
  std::size_t edge_begin = 0;
};

/// Eight traces (four stages times two halves), each with n arc points and
/// n edge points. Throws DomainError unless 0 < eps < r.
std::vector<DiskTrace> trace_disk_chain(double r, double eps, double alpha, std::size_t n);

}  // namespace sheetpow
