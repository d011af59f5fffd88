#include "fibquad/plot.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "fibquad/serialize.hpp"

namespace fibquad {

namespace {

struct Viewport {
  double x_min, x_max, y_min, y_max;
  int width, height;

  double px(double x) const { return (x - x_min) / (x_max - x_min) * width; }
  double py(double y) const { return height - (y - y_min) / (y_max - y_min) * height; }
};

double value(double a, double b, double c, double x) {
  return (a * x + b) * x + c;
}

}  // namespace

std::string render_svg(const QuadPoly& q, const PlotOptions& opt) {
  const RootPair roots = solve_quadratic(q);
  if (roots.kind != RootKind::two_distinct) {
    throw std::invalid_argument("plot needs two distinct rational roots");
  }
  const Point v = vertex(q);
  const double a = q.a().get_d();
  const double b = q.b().get_d();
  const double c = q.c().get_d();
  const double right = roots.x1.to_double();
  const double left = roots.x2.to_double();
  const double vy = v.y.to_double();

  const double margin = 0.25 * (right - left);
  // y range: the vertex value and the axis, padded by 10% of |vertex|.
  const double pad = 0.1 * std::abs(vy);
  const Viewport vp{left - margin, right + margin, std::min(0.0, vy) - pad, std::max(0.0, vy) + pad,
                    opt.width, opt.height};

  std::ostringstream svg;
  svg << std::fixed << std::setprecision(3);
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.width << "\" height=\""
      << opt.height << "\" viewBox=\"0 0 " << opt.width << ' ' << opt.height << "\">\n"
      << "  <defs><clipPath id=\"plot-area\"><rect x=\"0\" y=\"0\" width=\"" << opt.width << "\" height=\""
      << opt.height << "\"/></clipPath></defs>\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << opt.width << "\" height=\"" << opt.height << "\" fill=\"white\"/>\n";

  // Shaded region between the roots and the x-axis.
  svg << "  <path class=\"area\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"none\" d=\"M " << vp.px(left) << ' '
      << vp.py(0.0);
  for (int k = 0; k <= opt.samples; ++k) {
    const double x = left + (right - left) * k / opt.samples;
    svg << " L " << vp.px(x) << ' ' << vp.py(value(a, b, c, x));
  }
  svg << " L " << vp.px(right) << ' ' << vp.py(0.0) << " Z\"/>\n";

  const double y_axis_x = std::clamp(0.0, vp.x_min, vp.x_max);
  svg << "  <line class=\"x-axis\" x1=\"0\" y1=\"" << vp.py(0.0) << "\" x2=\"" << opt.width << "\" y2=\"" << vp.py(0.0)
      << "\" stroke=\"black\"/>\n"
      << "  <line class=\"y-axis\" x1=\"" << vp.px(y_axis_x) << "\" y1=\"0\" x2=\"" << vp.px(y_axis_x) << "\" y2=\""
      << opt.height << "\" stroke=\"black\"/>\n";

  svg << "  <polyline class=\"curve\" clip-path=\"url(#plot-area)\" fill=\"none\" stroke=\"#08519c\" "
         "stroke-width=\"2\" points=\"";
  for (int k = 0; k < opt.samples; ++k) {
    const double x = vp.x_min + (vp.x_max - vp.x_min) * k / (opt.samples - 1);
    if (k > 0) svg << ' ';
    svg << vp.px(x) << ',' << vp.py(value(a, b, c, x));
  }
  svg << "\"/>\n";

  const double label_dy = vy < 0 ? -8.0 : 18.0;
  svg << "  <text class=\"root-label\" x=\"" << vp.px(right) << "\" y=\"" << vp.py(0.0) + label_dy
      << "\" text-anchor=\"middle\" font-size=\"14\">x1 = " << plain(roots.x1) << "</text>\n"
      << "  <text class=\"root-label\" x=\"" << vp.px(left) << "\" y=\"" << vp.py(0.0) + label_dy
      << "\" text-anchor=\"middle\" font-size=\"14\">x2 = " << plain(roots.x2) << "</text>\n"
      << "  <circle class=\"vertex\" cx=\"" << vp.px(v.x.to_double()) << "\" cy=\"" << vp.py(vy)
      << "\" r=\"3\" fill=\"#a50f15\"/>\n"
      << "  <text class=\"vertex-label\" x=\"" << vp.px(v.x.to_double()) << "\" y=\"" << vp.py(vy) - label_dy
      << "\" text-anchor=\"middle\" font-size=\"14\">vertex (" << plain(v.x) << ", " << plain(v.y) << ")</text>\n"
      << "</svg>\n";
  return svg.str();
}

}  // namespace fibquad
