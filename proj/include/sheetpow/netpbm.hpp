#pragma once

#include <ostream>
#include <vector>

#include "sheetpow/julia.hpp"

namespace sheetpow {

/// Binary P5. maxval = min(max_iter, 65535), at least 1; samples are the
/// escape counts (rescaled to maxval when max_iter exceeds 65535), written
/// as 16-bit big-endian words when maxval > 255.
void write_pgm(std::ostream& out, const EscapeGrid& grid);

/// Binary P6, maxval 255, gray = 255 * count / max_iter on all channels.
void write_ppm(std::ostream& out, const EscapeGrid& grid);

/// "i,j,count" header, one row per pixel in raster order.
void write_grid_csv(std::ostream& out, const EscapeGrid& grid);

/// "stage,half,re,im" header, one row per traced point.
void write_trace_csv(std::ostream& out, const std::vector<DiskTrace>& traces);

}  // namespace sheetpow
