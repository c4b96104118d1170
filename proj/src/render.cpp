#include "apland/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

namespace apland {

namespace {

constexpr std::array<Rgb, 5> kAnchors{{
    {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};

// Fixed two-decimal output keeps the SVG byte-stable.
std::string px(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, res.ptr);
}

std::string hex(const Rgb& c) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out = "#";
  for (int v : {c.r, c.g, c.b}) {
    out += digits[(v >> 4) & 0xf];
    out += digits[v & 0xf];
  }
  return out;
}

double x_of(double F, const ParameterGrid& grid, const SvgLayout& l) {
  const double cw = l.width / grid.k_F;
  return l.left + (F * (grid.k_F - 1) + 0.5) * cw;
}

double y_of(double C, const ParameterGrid& grid, const SvgLayout& l) {
  const double ch = l.height / grid.k_C;
  return l.top + l.height - (C * (grid.k_C - 1) + 0.5) * ch;
}

std::string star_points(double cx, double cy, double outer, double inner) {
  std::string pts;
  for (int k = 0; k < 10; ++k) {
    const double radius = k % 2 == 0 ? outer : inner;
    const double angle = -std::numbers::pi / 2 + k * std::numbers::pi / 5;
    if (k > 0) pts += ' ';
    pts += px(cx + radius * std::cos(angle)) + "," + px(cy + radius * std::sin(angle));
  }
  return pts;
}

}  // namespace

Rgb colormap(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const double pos = t * (kAnchors.size() - 1);
  const auto lo = std::min(static_cast<std::size_t>(pos), kAnchors.size() - 2);
  const double w = pos - static_cast<double>(lo);
  const auto& a = kAnchors[lo];
  const auto& b = kAnchors[lo + 1];
  auto mix = [w](int p, int q) { return static_cast<int>(std::lround(p + w * (q - p))); };
  return {mix(a.r, b.r), mix(a.g, b.g), mix(a.b, b.b)};
}

std::array<double, 2> cell_center(const ParameterGrid& grid, Eigen::Index k,
                                  const SvgLayout& layout) {
  const double cw = layout.width / grid.k_F;
  const double ch = layout.height / grid.k_C;
  return {layout.left + (grid.f_index(k) + 0.5) * cw,
          layout.top + layout.height - (grid.c_index(k) + 0.5) * ch};
}

std::optional<std::string> render_contour_svg(const LandscapeSnapshot& snap,
                                              const SvgLayout& l) {
  if (snap.flat) return std::nullopt;
  const auto& grid = snap.grid;
  const double total_w = l.left + l.width + l.right;
  const double total_h = l.top + l.height + l.bottom;
  const double cw = l.width / grid.k_F;
  const double ch = l.height / grid.k_C;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(total_w) + "\" height=\"" +
         px(total_h) + "\" viewBox=\"0 0 " + px(total_w) + " " + px(total_h) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  svg += "<text x=\"" + px(l.left + l.width / 2) + "\" y=\"" + px(l.top / 2 + 5) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">fe=" +
         std::to_string(snap.meta.fe) + " rank=" + std::to_string(snap.meta.individual_rank) +
         "</text>\n";

  svg += "<g shape-rendering=\"crispEdges\">\n";
  for (Eigen::Index k = 0; k < grid.size(); ++k) {
    const double x = l.left + grid.f_index(k) * cw;
    const double y = l.top + l.height - (grid.c_index(k) + 1) * ch;
    svg += "<rect x=\"" + px(x) + "\" y=\"" + px(y) + "\" width=\"" + px(cw) + "\" height=\"" +
           px(ch) + "\" fill=\"" + hex(colormap(snap.g1_norm[k])) + "\"/>\n";
  }
  svg += "</g>\n";

  svg += "<rect x=\"" + px(l.left) + "\" y=\"" + px(l.top) + "\" width=\"" + px(l.width) +
         "\" height=\"" + px(l.height) + "\" fill=\"none\" stroke=\"#000000\"/>\n";
  for (double v : {0.0, 0.5, 1.0}) {
    svg += "<text x=\"" + px(x_of(v, grid, l)) + "\" y=\"" + px(l.top + l.height + 16) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           px(v).substr(0, 3) + "</text>\n";
    svg += "<text x=\"" + px(l.left - 6) + "\" y=\"" + px(y_of(v, grid, l) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           px(v).substr(0, 3) + "</text>\n";
  }
  svg += "<text x=\"" + px(l.left + l.width / 2) + "\" y=\"" + px(l.top + l.height + 36) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">F</text>\n";
  svg += "<text x=\"" + px(l.left - 36) + "\" y=\"" + px(l.top + l.height / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">C</text>\n";

  const auto [sx, sy] = cell_center(grid, snap.best_index, l);
  svg += "<polygon class=\"best\" points=\"" + star_points(sx, sy, 8.0, 3.5) +
         "\" fill=\"#ff2020\" stroke=\"#000000\" stroke-width=\"0.8\"/>\n";

  const double ax = std::clamp(x_of(snap.actual_pair.F, grid, l), l.left, l.left + l.width);
  const double ay = std::clamp(y_of(snap.actual_pair.C, grid, l), l.top, l.top + l.height);
  svg += "<circle class=\"actual\" cx=\"" + px(ax) + "\" cy=\"" + px(ay) +
         "\" r=\"5.00\" fill=\"none\" stroke=\"#ffffff\" stroke-width=\"2\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace apland
