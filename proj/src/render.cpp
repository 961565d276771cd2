#include "tubefold/render.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tubefold {

namespace {

// All coordinates are multiples of 1/2; print them from doubled integers.
std::string num(double v) {
  const long long twice = std::llround(v * 2);
  std::string s = std::to_string(twice / 2);
  if (twice % 2 != 0) {
    if (twice < 0 && twice / 2 == 0) s = "-0";
    s += ".5";
  }
  return s;
}

}  // namespace

std::string render_svg(const ChainCode& code, const RenderOptions& options) {
  if (options.scale < 1) throw std::invalid_argument("scale must be at least 1");
  if (options.margin < 0) throw std::invalid_argument("margin must be nonnegative");
  const NetLayout net = layout_squares(code, options.scale);
  const double s = options.scale;
  const double m = options.margin;

  double min_x = net.squares.front().cx, max_x = min_x;
  double min_y = net.squares.front().cy, max_y = min_y;
  for (const auto& q : net.squares) {
    min_x = std::min(min_x, q.cx);
    max_x = std::max(max_x, q.cx);
    min_y = std::min(min_y, q.cy);
    max_y = std::max(max_y, q.cy);
  }
  // Net grows upward on screen: flip y.
  auto px = [&](double x) { return m + (x - (min_x - s / 2)); };
  auto py = [&](double y) { return m + ((max_y + s / 2) - y); };
  const double width = (max_x - min_x) + s + 2 * m;
  const double height = (max_y - min_y) + s + 2 * m;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + ' ' + num(height) + "\">\n";
  out += "<g class=\"squares\" stroke=\"#000000\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < net.squares.size(); ++i) {
    const auto& q = net.squares[i];
    const char* fill = q.overlapping ? "#e04040" : (i == 0 ? "#f2c14e" : "#ffffff");
    out += "<rect x=\"" + num(px(q.cx - s / 2)) + "\" y=\"" + num(py(q.cy + s / 2)) + "\" width=\"" + num(s) +
           "\" height=\"" + num(s) + "\" fill=\"" + fill + "\"/>\n";
  }
  out += "</g>\n";
  out += "<g class=\"attachments\" stroke=\"#1f5fbf\" stroke-width=\"" + num(std::max(2.0, s / 8)) +
         "\" stroke-linecap=\"butt\">\n";
  for (const auto& a : net.attachments) {
    out += "<line x1=\"" + num(px(a.x1)) + "\" y1=\"" + num(py(a.y1)) + "\" x2=\"" + num(px(a.x2)) + "\" y2=\"" +
           num(py(a.y2)) + "\"/>\n";
  }
  out += "</g>\n";
  if (options.show_dual) {
    out += "<polyline class=\"dual\" fill=\"none\" stroke=\"#808080\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < net.squares.size(); ++i) {
      if (i) out += ' ';
      out += num(px(net.squares[i].cx)) + ',' + num(py(net.squares[i].cy));
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tubefold
