#pragma once

#include <string>

#include "aztec/diamond.hpp"

namespace aztec {

// Fixed styling so rendered output is stable enough for golden-file tests.
struct RenderOptions {
  bool overlay_paths = false;
  int cell_px = 40;                        // pixels per unit square; keep even
  std::string horizontal_fill = "#a8dadc";
  std::string vertical_fill = "#f4a261";
  std::string domino_stroke = "#1d3557";
  std::string path_stroke = "#e63946";
};

// Deterministic SVG: same tiling and options, byte-identical output. Dominoes
// are drawn in canonical order; the overlay draws the row paths as polylines.
// All coordinates are integers (cell_px must be even for midpoints).
std::string render_tiling_svg(const Tiling& t, const RenderOptions& opts = {});

}  // namespace aztec
