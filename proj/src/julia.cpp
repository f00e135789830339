#include "sheetpow/julia.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "sheetpow/translate.hpp"

namespace sheetpow {

void RenderConfig::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max)) {
    throw std::invalid_argument("view rectangle is empty");
  }
  if (width == 0 || height == 0) {
    throw std::invalid_argument("raster must have at least one pixel");
  }
  if (!(bailout > 0.0) || !std::isfinite(bailout)) {
    throw std::invalid_argument("bailout must be positive and finite");
  }
  if (!std::isfinite(alpha.value)) {
    throw std::invalid_argument("exponent must be finite");
  }
  if (mode != IterationMode::kPrincipal && !alpha.exact) {
    throw std::invalid_argument("sheet-tracking modes need a rational exponent p/q");
  }
}

RectComplex pixel_center(const RenderConfig& cfg, std::uint32_t i, std::uint32_t j) {
  const double dx = (cfg.x_max - cfg.x_min) / static_cast<double>(cfg.width);
  const double dy = (cfg.y_max - cfg.y_min) / static_cast<double>(cfg.height);
  return {cfg.x_min + (static_cast<double>(i) + 0.5) * dx,
          cfg.y_max - (static_cast<double>(j) + 0.5) * dy};
}

std::uint32_t iterate_point(RectComplex z0, const RenderConfig& cfg) {
  if (z0.norm() > cfg.bailout) {
    return 0;
  }
  if (cfg.mode == IterationMode::kPrincipal) {
    RectComplex z = z0;
    for (std::uint32_t n = 1; n <= cfg.max_iter; ++n) {
      z = principal_pow(z, cfg.alpha.value) + cfg.c;
      if (z.norm() > cfg.bailout) {
        return n;
      }
    }
    return cfg.max_iter;
  }

  const SurfaceSpec surf{*cfg.alpha.exact};
  const SheetedPoint c_point{cfg.c, 0};
  SheetedPoint s{z0, 0};
  for (std::uint32_t n = 1; n <= cfg.max_iter; ++n) {
    s = spow(s, surf);
    s = cfg.mode == IterationMode::kCcc ? add_ccc(s, cfg.c, surf) : add_sign(s, c_point, surf);
    if (s.z.norm() > cfg.bailout) {
      return n;
    }
  }
  return cfg.max_iter;
}

EscapeGrid render(const RenderConfig& cfg, unsigned threads) {
  cfg.validate();
  EscapeGrid grid{cfg, std::vector<std::uint32_t>(static_cast<std::size_t>(cfg.width) * cfg.height)};
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = std::min(threads, cfg.height);

  std::atomic<std::uint32_t> next_row{0};
  auto worker = [&] {
    for (std::uint32_t j = next_row++; j < cfg.height; j = next_row++) {
      std::uint32_t* row = grid.counts.data() + static_cast<std::size_t>(j) * cfg.width;
      for (std::uint32_t i = 0; i < cfg.width; ++i) {
        row[i] = iterate_point(pixel_center(cfg, i, j), cfg);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
  }
  return grid;
}

const char* to_string(DiskStage stage) {
  switch (stage) {
    case DiskStage::kInput:
      return "input";
    case DiskStage::kLog:
      return "log";
    case DiskStage::kScaled:
      return "scaled";
    case DiskStage::kExp:
      return "exp";
  }
  return "?";
}

const char* to_string(DiskHalf half) { return half == DiskHalf::kUpper ? "upper" : "lower"; }

std::vector<DiskTrace> trace_disk_chain(double r, double eps, double alpha, std::size_t n) {
  if (!(r > 0.0) || !(eps > 0.0) || !(eps < r)) {
    throw DomainError("disk must satisfy 0 < eps < r");
  }
  if (n == 0) {
    throw std::invalid_argument("need at least one sample per boundary piece");
  }
  std::vector<DiskTrace> traces;
  for (const DiskHalf half : {DiskHalf::kUpper, DiskHalf::kLower}) {
    const double side = half == DiskHalf::kUpper ? 1.0 : -1.0;
    // Each input point with the argument its half assigns to it.
    std::vector<RectComplex> input;
    std::vector<PolarComplex> polar;
    for (std::size_t k = 0; k < n; ++k) {
      const double phi = std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
      const RectComplex z{-r + eps * std::cos(phi), side * eps * std::sin(phi)};
      input.push_back(z);
      polar.push_back(to_polar(z));
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double x = -r - eps + 2.0 * eps * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
      input.emplace_back(x, 0.0);
      polar.push_back({-x, side * std::numbers::pi});
    }

    DiskTrace in{DiskStage::kInput, half, input, n};
    DiskTrace log{DiskStage::kLog, half, {}, n};
    DiskTrace scaled{DiskStage::kScaled, half, {}, n};
    DiskTrace exp{DiskStage::kExp, half, {}, n};
    for (const PolarComplex& p : polar) {
      const RectComplex l{std::log(p.r), p.theta};
      const RectComplex s{alpha * l.re(), alpha * l.im()};
      log.points.push_back(l);
      scaled.points.push_back(s);
      exp.points.push_back(complex_exp(s));
    }
    traces.push_back(std::move(in));
    traces.push_back(std::move(log));
    traces.push_back(std::move(scaled));
    traces.push_back(std::move(exp));
  }
  return traces;
}

}  // namespace sheetpow
