#pragma once

#include <string>

#include "fibquad/quadratic.hpp"

namespace fibquad {

struct PlotOptions {
  int width = 640;
  int height = 480;
  int samples = 256;
};

/// SVG 1.1 figure of q between its roots: the sampled parabola as a
/// polyline, the root-to-root region as a closed shaded path, both axes, and
/// text labels for the two roots and the vertex. Throws std::invalid_argument
/// unless q has two distinct rational roots.
std::string render_svg(const QuadPoly& q, const PlotOptions& options = {});

}  // namespace fibquad
