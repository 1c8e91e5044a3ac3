#include "aztec/svg.hpp"

#include <string>

#include "aztec/errors.hpp"

namespace aztec {

std::string render_tiling_svg(const Tiling& t, const RenderOptions& opts) {
  validate_tiling(t);
  if (opts.cell_px < 2 || opts.cell_px % 2 != 0)
    throw DomainError("cell_px must be a positive even pixel count");
  const int n = t.order;
  const int scale = opts.cell_px;
  const int span = (2 * n + 2) * scale;  // region bounding box, padded to grid

  // unit coordinates -> pixels, y flipped so north is up
  const auto px = [&](int x) { return (x + n + 1) * scale; };
  const auto py = [&](int y) { return (n + 1 - y) * scale; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(span) + "\" height=\"" + std::to_string(span) +
         "\" viewBox=\"0 0 " + std::to_string(span) + " " +
         std::to_string(span) + "\">\n";
  svg += "<rect width=\"" + std::to_string(span) + "\" height=\"" +
         std::to_string(span) + "\" fill=\"#ffffff\"/>\n";

  for (const Domino& d : t.dominoes) {
    const bool horizontal = d.orientation == Orientation::Horizontal;
    const int w = (horizontal ? 2 : 1) * scale;
    const int h = (horizontal ? 1 : 2) * scale;
    const int x = px(d.anchor.x);
    const int y = py(d.anchor.y + (horizontal ? 1 : 2));
    svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
           "\" width=\"" + std::to_string(w) + "\" height=\"" +
           std::to_string(h) + "\" fill=\"" +
           (horizontal ? opts.horizontal_fill : opts.vertical_fill) +
           "\" stroke=\"" + opts.domino_stroke + "\" stroke-width=\"2\"/>\n";
  }

  if (opts.overlay_paths) {
    const int half = scale / 2;
    for (const auto& line : tiling_path_polylines(t)) {
      svg += "<polyline fill=\"none\" stroke=\"" + opts.path_stroke +
             "\" stroke-width=\"3\" points=\"";
      bool first = true;
      for (const Point& p : line) {
        // doubled coordinates: one doubled unit is half a cell
        if (!first) svg += ' ';
        first = false;
        svg += std::to_string(px(0) + p.x * half) + ',' +
               std::to_string(py(0) - p.y * half);
      }
      svg += "\"/>\n";
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace aztec
