#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <locale>
#include <sstream>

namespace toric_diamond::cli {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const lattice::ConvexLatticePolygon& p, const SvgOptions& options) {
  const auto& vs = p.vertices();
  // The box always contains the origin so the axes are visible.
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto& v : vs) {
    const double x = v.x.convert_to<double>(), y = v.y.convert_to<double>();
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  const double padx = options.padding * (xmax - xmin);
  const double pady = options.padding * (ymax - ymin);
  const double left = xmin - padx, right = xmax + padx;
  const double bottom = ymin - pady, top = ymax + pady;
  const double u = options.unit;
  const double width = (right - left) * u, height = (top - bottom) * u;
  auto sx = [&](double x) { return (x - left) * u; };
  auto sy = [&](double y) { return (top - y) * u; };  // y up

  std::ostringstream o;
  o.imbue(std::locale::classic());
  o << std::fixed << std::setprecision(2);
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
    << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  if (!options.title.empty()) o << "  <title>" << escape(options.title) << "</title>\n";
  o << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  o << "  <g stroke=\"#888888\" stroke-width=\"1\">\n";
  o << "    <line x1=\"" << sx(left) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(right) << "\" y2=\"" << sy(0)
    << "\"/>\n";
  o << "    <line x1=\"" << sx(0) << "\" y1=\"" << sy(bottom) << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(top)
    << "\"/>\n";
  o << "  </g>\n";

  if (options.lattice_dots) {
    o << "  <g fill=\"#bbbbbb\">\n";
    for (long y = static_cast<long>(std::ceil(bottom)); y <= static_cast<long>(std::floor(top)); ++y)
      for (long x = static_cast<long>(std::ceil(left)); x <= static_cast<long>(std::floor(right)); ++x)
        o << "    <circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"1.50\"/>\n";
    o << "  </g>\n";
  }

  o << "  <path d=\"";
  for (std::size_t i = 0; i < vs.size(); ++i)
    o << (i == 0 ? "M " : " L ") << sx(vs[i].x.convert_to<double>()) << ' '
      << sy(vs[i].y.convert_to<double>());
  o << " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

  o << "  <g fill=\"black\">\n";
  for (const auto& v : vs)
    o << "    <circle cx=\"" << sx(v.x.convert_to<double>()) << "\" cy=\"" << sy(v.y.convert_to<double>())
      << "\" r=\"3.00\"/>\n";
  o << "  </g>\n";

  if (options.labels) {
    o << "  <g font-family=\"monospace\" font-size=\"12\">\n";
    for (const auto& v : vs)
      o << "    <text x=\"" << sx(v.x.convert_to<double>()) + 4 << "\" y=\"" << sy(v.y.convert_to<double>()) - 4
        << "\">" << escape(lattice::to_string(v)) << "</text>\n";
    o << "  </g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace toric_diamond::cli
