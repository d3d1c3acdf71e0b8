#include <gtest/gtest.h>

#include <set>

#include "bnloci/svg.hpp"

using namespace bnloci;

namespace {

// Vertices of the first polygon inside the group with this id.
std::set<std::string> polygon_points(const std::string& svg, const std::string& group) {
  const std::size_t g = svg.find("<g id=\"" + group + "\">");
  if (g == std::string::npos) return {};
  const std::size_t p = svg.find("<polygon points=\"", g);
  const std::size_t start = p + 17;
  const std::string pts = svg.substr(start, svg.find('"', start) - start);
  std::set<std::string> out;
  std::size_t at = 0;
  while (at < pts.size()) {
    std::size_t sp = pts.find(' ', at);
    if (sp == std::string::npos) sp = pts.size();
    out.insert(pts.substr(at, sp - at));
    at = sp + 1;
  }
  return out;
}

PlotSpec figure(std::int64_t g) {
  PlotSpec s;
  s.genus = g;
  s.regions = {RegionId::parse("bmno"), RegionId::parse("teixidor")};
  return s;
}

}  // namespace

TEST(Svg, Coordinates) {
  PlotSpec s;
  s.genus = 10;
  EXPECT_EQ(svg_x(s, 0), "40.000000");
  EXPECT_EQ(svg_x(s, 18), "920.000000");
  EXPECT_EQ(svg_x(s, Rat(1, 3)), "56.296296");
  EXPECT_EQ(svg_y(s, 0), "520.000000");
  EXPECT_EQ(svg_y(s, 10), "40.000000");
}

TEST(Svg, ByteIdentical) {
  for (std::int64_t g : {10, 12, 13}) EXPECT_EQ(render_svg(figure(g)), render_svg(figure(g)));
}

TEST(Svg, RegionOrderDoesNotMatter) {
  PlotSpec a = figure(10), b = figure(10);
  b.regions = {RegionId::parse("teixidor"), RegionId::parse("bmno"), RegionId::parse("bmno")};
  EXPECT_EQ(render_svg(a), render_svg(b));
}

TEST(Svg, PolygonsPassThroughBreakpoints) {
  for (std::int64_t g : {10, 12, 13}) {
    const PlotSpec spec = figure(g);
    const std::string svg = render_svg(spec);
    const std::pair<const char*, BoundaryFn> cases[] = {{"region-BMNO", f_fn(Genus(g))},
                                                       {"region-T", t_fn(Genus(g))}};
    for (const auto& [group, fn] : cases) {
      const std::set<std::string> pts = polygon_points(svg, group);
      ASSERT_FALSE(pts.empty()) << group;
      for (const Rat& x : fn.breakpoints()) {
        std::vector<Rat> ys;
        if (x != fn.lo()) ys.push_back(fn.left_limit(x));
        if (x != fn.hi()) ys.push_back(fn.right_limit(x));
        for (const Rat& y : ys) {
          EXPECT_TRUE(pts.count(svg_x(spec, x) + "," + svg_y(spec, y))) << "g=" << g << " " << group << " at " << x;
        }
      }
    }
  }
}

TEST(Svg, Structure) {
  PlotSpec s = figure(10);
  s.regions.push_back(RegionId::parse("tbgn:6:2"));
  const std::string svg = render_svg(s);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_NE(svg.find("id=\"bn-curve\""), std::string::npos);
  EXPECT_NE(svg.find("id=\"region-T-6-2-BGN\""), std::string::npos);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  s.show_bn_curve = false;
  EXPECT_EQ(render_svg(s).find("bn-curve"), std::string::npos);
}

TEST(Svg, Rejects) {
  PlotSpec s = figure(2);
  EXPECT_THROW(render_svg(s), std::invalid_argument);
  s = figure(10);
  s.width_px = 50;
  EXPECT_THROW(render_svg(s), std::invalid_argument);
}
