#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnloci/regions.hpp"

namespace bnloci {

struct PlotSpec {
  std::int64_t genus = 10;
  std::vector<RegionId> regions;
  bool show_bn_curve = true;
  std::int64_t width_px = 960;
  std::int64_t height_px = 560;
  RegionMode mode = RegionMode::Stable;
};

/// Pixel coordinates of a plane point, printed with six decimals.
std::string svg_x(const PlotSpec& spec, const Rat& mu);
std::string svg_y(const PlotSpec& spec, const Rat& lambda);

/// SVG 1.1 document for the spec. The output depends only on the spec.
std::string render_svg(const PlotSpec& spec);

}  // namespace bnloci
