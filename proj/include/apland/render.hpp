#pragma once

#include "apland/profiler.hpp"

#include <array>
#include <optional>
#include <string>

namespace apland {

struct Rgb {
  int r, g, b;
};

// Monotone dark-blue -> teal -> green -> yellow ramp (five viridis anchors,
// linearly interpolated). t is clamped to [0, 1].
Rgb colormap(double t);

struct SvgLayout {
  double left = 60, top = 40, width = 320, height = 320, right = 20, bottom = 50;
};

// Heatmap of g1_norm over the grid, one rect per cell, with a star on the
// best pair and a circle on the PAM's pair. Flat snapshots yield nullopt.
std::optional<std::string> render_contour_svg(const LandscapeSnapshot& snap,
                                              const SvgLayout& layout = {});

// Pixel centre of grid cell k under `layout`.
std::array<double, 2> cell_center(const ParameterGrid& grid, Eigen::Index k,
                                  const SvgLayout& layout = {});

}  // namespace apland
