#include <stdexcept>

#include "bnloci/regions.hpp"

namespace bnloci {

namespace {

Segment make_segment(Genus g, const RegionId& id, RegionMode mode, const BNPoint& a, const BNPoint& b) {
  const auto in = [&](const BNPoint& p) { return in_region(g, id, p, mode); };
  const BNPoint mid{(a.mu + b.mu) / Rat(2), (a.lambda + b.lambda) / Rat(2)};
  return {a, b, in(a), in(b), in(mid)};
}

void close_loop(Genus g, const RegionId& id, RegionMode mode, const std::vector<BNPoint>& vertices,
                std::vector<Segment>& out) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const BNPoint& a = vertices[i];
    const BNPoint& b = vertices[(i + 1) % vertices.size()];
    if (a == b) continue;
    out.push_back(make_segment(g, id, mode, a, b));
  }
}

std::vector<BNPoint> outline_under(const BoundaryFn& top) {
  std::vector<BNPoint> v;
  const Rat lo = top.lo();
  const Rat hi = top.hi();
  v.push_back({lo, 0});
  for (const Piece& p : top.pieces()) {
    const BNPoint a{p.a, p.at(p.a)};
    const BNPoint b{p.b, p.at(p.b)};
    if (v.back() != a) v.push_back(a);
    v.push_back(b);
  }
  v.push_back({hi, 0});
  return v;
}

// Excluded pieces of the vertical line mu = m below the top boundary, found
// by sampling lambda on the lattice (1/g)Z and at midpoints.
void interior_exclusions(Genus g, const RegionId& id, RegionMode mode, const BoundaryFn& top,
                         std::vector<Segment>& out) {
  const std::int64_t G = g.value();
  const Rat step(1, G);
  for (std::int64_t m = top.lo().to_int64() + 1; m < top.hi().to_int64(); ++m) {
    const Rat mu(m);
    const Rat ceiling = top(mu);
    const auto in = [&](const Rat& la) { return in_region(g, id, {mu, la}, mode); };
    std::vector<Rat> lam{Rat(0)};
    for (Rat la = step; la < ceiling; la += step) lam.push_back(la);
    lam.push_back(ceiling);
    const std::size_t J = lam.size() - 1;
    std::vector<bool> mid(J + 1, true), pt(J + 1, false);
    for (std::size_t j = 1; j <= J; ++j) {
      mid[j] = in((lam[j - 1] + lam[j]) / Rat(2));
      pt[j] = in(lam[j]);
    }
    for (std::size_t j = 1; j <= J;) {
      if (!mid[j]) {
        const std::size_t start = j - 1;
        std::size_t end = j;
        while (end + 1 <= J && !mid[end + 1] && !pt[end]) ++end;
        out.push_back({{mu, lam[start]}, {mu, lam[end]}, pt[start], pt[end], false});
        j = end + 1;
        continue;
      }
      if (!pt[j] && (j == J || mid[j + 1])) out.push_back({{mu, lam[j]}, {mu, lam[j]}, false, false, false});
      ++j;
    }
  }
}

}  // namespace

Polyline boundary_polyline(Genus g, const RegionId& id, RegionMode mode) {
  g.require_at_least(3, "boundary_polyline");
  const std::int64_t G = g.value();
  Polyline pl{id, G, {}};
  std::vector<BNPoint> v;
  switch (id.kind) {
    case RegionKind::P:
      v = {{0, 0}, {0, 1}, {2 * G - 2, G}, {2 * G - 2, G - 1}, {G - 1, 0}};
      break;
    case RegionKind::R:
      v = {{0, 0}, {0, 1}, {G - 1, Rat(G + 1, 2)}, {G - 1, 0}};
      break;
    case RegionKind::BGN:
    case RegionKind::TranslateBGN: {
      const std::int64_t d = id.kind == RegionKind::BGN ? 0 : id.d;
      const std::int64_t s = id.kind == RegionKind::BGN ? 1 : id.s;
      v = {{d, 0}, {d, Rat(s * (G - 1), G)}, {d + 1, s}, {d + 1, 0}};
      break;
    }
    case RegionKind::M:
    case RegionKind::TranslateM: {
      const std::int64_t d = id.kind == RegionKind::M ? 0 : id.d;
      const std::int64_t s = id.kind == RegionKind::M ? 1 : id.s;
      v = {{d + 1, 0}, {d + 1, s}, {d + 2, Rat(s * (G + 1), G)}, {d + 2, 0}};
      break;
    }
    case RegionKind::BMNO:
    case RegionKind::TeixidorT:
    case RegionKind::BMNOh: {
      const BoundaryFn top = region_top(g, id);
      close_loop(g, id, mode, outline_under(top), pl.segments);
      interior_exclusions(g, id, mode, top, pl.segments);
      return pl;
    }
    case RegionKind::BNCurveBelow:
      throw std::invalid_argument("no polyline for the region below the BN curve");
  }
  close_loop(g, id, mode, v, pl.segments);
  return pl;
}

}  // namespace bnloci
