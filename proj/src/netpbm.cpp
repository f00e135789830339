#include "sheetpow/netpbm.hpp"

#include <algorithm>
#include <cstdint>

namespace sheetpow {

namespace {

std::uint32_t pgm_maxval(const EscapeGrid& grid) {
  return std::clamp<std::uint32_t>(grid.config.max_iter, 1, 65535);
}

std::uint32_t pgm_sample(std::uint32_t count, std::uint32_t max_iter, std::uint32_t maxval) {
  if (max_iter <= maxval) {
    return count;
  }
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(count) * maxval / max_iter);
}

}  // namespace

void write_pgm(std::ostream& out, const EscapeGrid& grid) {
  const std::uint32_t maxval = pgm_maxval(grid);
  out << "P5\n" << grid.config.width << ' ' << grid.config.height << '\n' << maxval << '\n';
  std::vector<char> bytes;
  bytes.reserve(grid.counts.size() * (maxval > 255 ? 2 : 1));
  for (const std::uint32_t count : grid.counts) {
    const std::uint32_t s = pgm_sample(count, grid.config.max_iter, maxval);
    if (maxval > 255) {
      bytes.push_back(static_cast<char>((s >> 8) & 0xff));
    }
    bytes.push_back(static_cast<char>(s & 0xff));
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void write_ppm(std::ostream& out, const EscapeGrid& grid) {
  out << "P6\n" << grid.config.width << ' ' << grid.config.height << "\n255\n";
  const std::uint64_t max_iter = grid.config.max_iter;
  std::vector<char> bytes;
  bytes.reserve(grid.counts.size() * 3);
  for (const std::uint32_t count : grid.counts) {
    const auto gray = max_iter == 0 ? 0 : static_cast<unsigned char>(255 * std::uint64_t{count} / max_iter);
    bytes.insert(bytes.end(), 3, static_cast<char>(gray));
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void write_grid_csv(std::ostream& out, const EscapeGrid& grid) {
  out << "i,j,count\n";
  for (std::uint32_t j = 0; j < grid.config.height; ++j) {
    for (std::uint32_t i = 0; i < grid.config.width; ++i) {
      out << i << ',' << j << ',' << grid.at(i, j) << '\n';
    }
  }
}

void write_trace_csv(std::ostream& out, const std::vector<DiskTrace>& traces) {
  out << "stage,half,re,im\n";
  for (const DiskTrace& t : traces) {
    for (const RectComplex& p : t.points) {
      out << to_string(t.stage) << ',' << to_string(t.half) << ',' << format_real(p.re()) << ','
          << format_real(p.im()) << '\n';
    }
  }
}

}  // namespace sheetpow
