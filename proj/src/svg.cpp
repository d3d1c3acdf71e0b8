#include "bnloci/svg.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <iterator>
#include <stdexcept>
#include <set>
#include <sstream>

namespace bnloci {

namespace {

constexpr std::int64_t kMargin = 40;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string slug(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) out += c;
    else if (!out.empty() && out.back() != '-') out += '-';
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out;
}

bool filled(RegionKind k) { return k == RegionKind::BMNO || k == RegionKind::BMNOh; }

std::string xy(const PlotSpec& s, const BNPoint& p) { return svg_x(s, p.mu) + "," + svg_y(s, p.lambda); }

}  // namespace

std::string svg_x(const PlotSpec& spec, const Rat& mu) {
  const Rat inner(spec.width_px - 2 * kMargin);
  return to_fixed(Rat(kMargin) + mu * inner / Rat(2 * spec.genus - 2), 6);
}

std::string svg_y(const PlotSpec& spec, const Rat& lambda) {
  const Rat inner(spec.height_px - 2 * kMargin);
  return to_fixed(Rat(spec.height_px - kMargin) - lambda * inner / Rat(spec.genus), 6);
}

std::string render_svg(const PlotSpec& spec) {
  if (spec.width_px <= 2 * kMargin || spec.height_px <= 2 * kMargin) {
    throw std::invalid_argument("plot is too small");
  }
  const Genus g(spec.genus);
  g.require_at_least(3, "plot");
  const std::int64_t G = spec.genus;
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width_px << "\" height=\""
    << spec.height_px << "\" viewBox=\"0 0 " << spec.width_px << ' ' << spec.height_px << "\">\n";

  // frame
  o << "<g id=\"frame\">\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << spec.width_px << "\" height=\"" << spec.height_px
    << "\" fill=\"white\"/>\n";
  o << "<line x1=\"" << svg_x(spec, 0) << "\" y1=\"" << svg_y(spec, 0) << "\" x2=\"" << svg_x(spec, 2 * G - 2)
    << "\" y2=\"" << svg_y(spec, 0) << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << svg_x(spec, 0) << "\" y1=\"" << svg_y(spec, 0) << "\" x2=\"" << svg_x(spec, 0)
    << "\" y2=\"" << svg_y(spec, G) << "\" stroke=\"black\"/>\n";
  for (std::int64_t m = 0; m <= 2 * G - 2; ++m) {
    o << "<text x=\"" << svg_x(spec, m) << "\" y=\"" << svg_y(spec, 0) << "\" dy=\"14\" font-size=\"9\""
      << " text-anchor=\"middle\">" << m << "</text>\n";
  }
  for (std::int64_t l = 1; l <= G; ++l) {
    o << "<text x=\"" << svg_x(spec, 0) << "\" y=\"" << svg_y(spec, l) << "\" dx=\"-6\" font-size=\"9\""
      << " text-anchor=\"end\">" << l << "</text>\n";
  }
  std::string pent;
  for (const Segment& s : boundary_polyline(g, {RegionKind::P, 0, 1}).segments) {
    pent += (pent.empty() ? "" : " ") + xy(spec, s.from);
  }
  o << "<polygon id=\"P\" points=\"" << pent << "\" fill=\"none\" stroke=\"#999999\"/>\n";
  o << "</g>\n";

  // curves
  if (spec.show_bn_curve) {
    o << "<g id=\"curves\">\n<polyline id=\"bn-curve\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    const double w = static_cast<double>(spec.width_px - 2 * kMargin);
    const double h = static_cast<double>(spec.height_px - 2 * kMargin);
    for (std::int64_t i = 0; i <= 32 * (2 * G - 2); ++i) {
      const Rat mu(i, 32);
      const double x = static_cast<double>(kMargin) + mu.to_double() * w / static_cast<double>(2 * G - 2);
      const double y = static_cast<double>(spec.height_px - kMargin) -
                       bn_curve(g, mu).approx() * h / static_cast<double>(G);
      o << (i ? " " : "") << fixed(x) << ',' << fixed(y);
    }
    o << "\"/>\n</g>\n";
  }

  // regions
  std::vector<RegionId> ids = spec.regions;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::size_t colour = 0;
  for (const RegionId& id : ids) {
    if (id.kind == RegionKind::BNCurveBelow) continue;
    const std::string c = kPalette[colour++ % std::size(kPalette)];
    const Polyline pl = boundary_polyline(g, id, spec.mode);
    o << "<g id=\"region-" << slug(id.name()) << "\">\n";
    std::string pts;
    const BNPoint start = pl.segments.front().from;
    for (const Segment& s : pl.segments) {
      pts += (pts.empty() ? "" : " ") + xy(spec, s.from);
      if (s.to == start) break;
    }
    o << "<polygon points=\"" << pts << "\" stroke=\"none\" fill=\"" << (filled(id.kind) ? c : "none")
      << "\" fill-opacity=\"0.25\"/>\n";
    std::set<std::pair<std::string, std::string>> holes;
    for (const Segment& s : pl.segments) {
      if (s.from == s.to) {
        holes.insert({svg_x(spec, s.from.mu), svg_y(spec, s.from.lambda)});
        continue;
      }
      o << "<line x1=\"" << svg_x(spec, s.from.mu) << "\" y1=\"" << svg_y(spec, s.from.lambda) << "\" x2=\""
        << svg_x(spec, s.to.mu) << "\" y2=\"" << svg_y(spec, s.to.lambda) << "\" stroke=\"" << c << '"'
        << (s.include_interior ? "" : " stroke-dasharray=\"4 3\"") << "/>\n";
      if (s.include_interior) {
        for (const auto& [p, in] : {std::pair{s.from, s.include_from}, std::pair{s.to, s.include_to}}) {
          if (!in && p.lambda.sign() > 0) holes.insert({svg_x(spec, p.mu), svg_y(spec, p.lambda)});
        }
      }
    }
    for (const auto& [x, y] : holes) {
      o << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"2.5\" fill=\"white\" stroke=\"" << c << "\"/>\n";
    }
    o << "</g>\n";
  }

  // legend
  o << "<g id=\"legend\" font-size=\"11\">\n";
  std::int64_t row = 0;
  colour = 0;
  for (const RegionId& id : ids) {
    if (id.kind == RegionKind::BNCurveBelow) continue;
    const std::int64_t y = kMargin / 2 + 14 * row++;
    o << "<rect x=\"" << spec.width_px - 150 << "\" y=\"" << y << "\" width=\"10\" height=\"10\" fill=\""
      << kPalette[colour++ % std::size(kPalette)] << "\"/>\n";
    o << "<text x=\"" << spec.width_px - 134 << "\" y=\"" << y + 9 << "\">" << id.name() << "</text>\n";
  }
  if (spec.show_bn_curve) {
    const std::int64_t y = kMargin / 2 + 14 * row;
    o << "<line x1=\"" << spec.width_px - 150 << "\" y1=\"" << y + 5 << "\" x2=\"" << spec.width_px - 140
      << "\" y2=\"" << y + 5 << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << spec.width_px - 134 << "\" y=\"" << y + 9 << "\">BN curve</text>\n";
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

}  // namespace bnloci
