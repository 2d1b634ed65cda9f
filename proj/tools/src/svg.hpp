#pragma once

#include "toric_diamond/lattice.hpp"

#include <string>

namespace toric_diamond::cli {

struct SvgOptions {
  double padding = 0.1;    // fraction of the bounding box added on each side
  double unit = 40.0;      // pixels per lattice unit
  bool lattice_dots = true;
  bool labels = true;
  std::string title;
};

// Axes, lattice points, the polygon and "(x,y)" vertex labels. The output
// depends only on the arguments.
std::string render_svg(const lattice::ConvexLatticePolygon& p, const SvgOptions& options = {});

}  // namespace toric_diamond::cli
