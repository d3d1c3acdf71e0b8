#include <gtest/gtest.h>

#include <set>

#include "bnloci/grid.hpp"
#include "bnloci/regions.hpp"
#include "reference.hpp"

using namespace bnloci;

namespace {

ref::Q Q(const Rat& r) { return ref::Q(r.numerator(), r.denominator()); }

BNPoint pt(Rat mu, Rat la) { return {std::move(mu), std::move(la)}; }

std::vector<BNPoint> grid_P(std::int64_t g, std::int64_t den) {
  std::vector<BNPoint> out;
  for (const Rat& mu : farey_range(Rat(0), Rat(2 * g - 2), den)) {
    for (const Rat& la : farey_range(Rat(0), mu / 2 + 1, den, true, false)) {
      if (in_P(Genus(g), {mu, la})) out.push_back({mu, la});
    }
  }
  return out;
}

}  // namespace

TEST(RegionP, Examples) {
  EXPECT_TRUE(in_P(Genus(2), pt(1, 1)));
  EXPECT_FALSE(in_P(Genus(3), pt(3, 1)));
  EXPECT_FALSE(in_P(Genus(3), pt(2, 3)));
  EXPECT_TRUE(in_R(Genus(3), pt(2, 1)));
  EXPECT_FALSE(in_R(Genus(3), pt(Rat(5, 2), 1)));
  EXPECT_FALSE(in_R(Genus(3), pt(2, 0)));
}

TEST(RegionP, MatchesInequalities) {
  for (std::int64_t g = 2; g <= 6; ++g) {
    for (const Rat& mu : farey_range(Rat(-1), Rat(2 * g), 4)) {
      for (const Rat& la : farey_range(Rat(-1), Rat(g + 1), 4)) {
        ASSERT_EQ(in_P(Genus(g), {mu, la}), ref::in_P(g, Q(mu), Q(la)));
      }
    }
  }
}

TEST(BaseRegions, Examples) {
  EXPECT_FALSE(in_BGN(Genus(3), pt(1, 1)));
  EXPECT_TRUE(in_BGN(Genus(3), pt(Rat(1, 2), Rat(1, 2))));
  EXPECT_TRUE(in_M(Genus(3), pt(2, Rat(1, 2))));
  EXPECT_FALSE(in_M(Genus(3), pt(2, 1)));
  EXPECT_TRUE(in_M(Genus(3), pt(2, Rat(4, 3)), RegionMode::NonHyperelliptic));
  EXPECT_TRUE(in_BGN(Genus(3), pt(1, 1), RegionMode::Semistable));
  EXPECT_THROW(in_BGN(Genus(2), pt(Rat(1, 2), Rat(1, 2))), std::invalid_argument);
  EXPECT_THROW(in_M(Genus(2), pt(Rat(3, 2), Rat(1, 2))), std::invalid_argument);
}

TEST(Maps, TranslateExamples) {
  const BNPoint p = pt(Rat(1, 2), Rat(3, 4));
  EXPECT_EQ(apply_T(0, 1, p), p);
  EXPECT_EQ(apply_T(6, 2, p), pt(Rat(13, 2), Rat(3, 2)));
  for (std::int64_t s = 1; s < 6; ++s) EXPECT_EQ(apply_T(2 * s - 2, s, pt(1, 1)), pt(2 * s - 1, s));
  EXPECT_EQ(apply_T_inverse(6, 2, apply_T(6, 2, p)), p);
  EXPECT_THROW(apply_T(1, 0, p), std::invalid_argument);
  EXPECT_THROW(apply_U(Genus(4), 1, 0, p), std::invalid_argument);
}

TEST(Maps, DualTranslateExamples) {
  EXPECT_EQ(apply_U(Genus(10), 9, 2, pt(1, 1)), pt(8, 1));
  EXPECT_EQ(apply_U(Genus(10), 11, 2, pt(1, Rat(1, 4))), pt(6, Rat(-5, 2)));
  for (std::int64_t g : {3, 5, 10}) {
    for (std::int64_t d = 0; d < 2 * g; ++d) {
      for (std::int64_t s = 1; s <= 3; ++s) {
        for (const Rat& mu : farey_range(Rat(0), Rat(2), 3)) {
          const BNPoint p{mu, Rat(2, 3)};
          ASSERT_EQ(apply_U(Genus(g), d, s, p), serre_dual(Genus(g), apply_T(d, s, p)));
        }
      }
    }
  }
}

TEST(Translates, Examples) {
  const Genus g(10);
  EXPECT_FALSE(in_translate_BGN(g, 6, 2, pt(7, 2)));
  EXPECT_TRUE(in_translate_BGN(g, 6, 2, pt(Rat(13, 2), Rat(19, 10))));
  EXPECT_FALSE(in_translate_BGN(g, 6, 2, pt(Rat(13, 2), Rat(191, 100))));
  EXPECT_TRUE(in_translate_M(g, 6, 2, pt(8, Rat(3, 2))));
  EXPECT_FALSE(in_translate_M(g, 6, 2, pt(8, 2)));
  EXPECT_FALSE(in_translate_M(g, 6, 2, pt(7, Rat(1, 2))));
}

TEST(Tiles, GenusTenChain) {
  using K = Tile::Kind;
  const std::vector<Tile> want{{K::TranslateBGN, 0, 1}, {K::TranslateM, 0, 1}, {K::TranslateM, 1, 1},
                               {K::TranslateM, 2, 1},   {K::TranslateM, 3, 1}, {K::TranslateM, 4, 1},
                               {K::DualBGN, 12, 5},     {K::TranslateBGN, 6, 2}, {K::TranslateM, 6, 2},
                               {K::TranslateM, 7, 2},   {K::DualBGN, 9, 3}};
  EXPECT_EQ(bmno_tiles(Genus(10)), want);
}

TEST(BoundaryFunctions, Examples) {
  const BoundaryFn f = f_fn(Genus(10));
  EXPECT_EQ(f(6), Rat(3, 2));
  EXPECT_EQ(f(Rat(13, 2)), Rat(19, 10));
  EXPECT_EQ(f(12), Rat(9, 2));
  const BoundaryFn t = t_fn(Genus(10));
  EXPECT_EQ(t(Rat(13, 2)), Rat(3, 2));
  EXPECT_EQ(t(5), Rat(1));
  EXPECT_EQ(t(9), Rat(3));
  EXPECT_EQ(h_fn(Genus(4))(4), Rat(5, 2));
  for (const BoundaryFn& fn : {f, t, h_fn(Genus(10))}) {
    EXPECT_EQ(fn.lo(), Rat(0));
    EXPECT_EQ(fn.hi(), Rat(18));
    EXPECT_FALSE(fn.in_domain(0));
    EXPECT_FALSE(fn.in_domain(18));
  }
  EXPECT_THROW(f_fn(Genus(2)), std::invalid_argument);
  EXPECT_THROW(t_fn(Genus(2)), std::invalid_argument);
  EXPECT_THROW(h_fn(Genus(2)), std::invalid_argument);
}

TEST(BoundaryFunctions, MatchReferenceFormulas) {
  for (std::int64_t g = 3; g <= 30; ++g) {
    const BoundaryFn f = f_fn(Genus(g)), t = t_fn(Genus(g)), h = h_fn(Genus(g));
    for (const Rat& mu : farey_range(Rat(0), Rat(2 * g - 2), 6, true, true)) {
      ASSERT_EQ(Q(f(mu)), ref::f(g, Q(mu))) << "g=" << g << " mu=" << mu;
      ASSERT_EQ(Q(t(mu)), ref::t(g, Q(mu))) << "g=" << g << " mu=" << mu;
      ASSERT_EQ(Q(h(mu)), ref::h(g, Q(mu))) << "g=" << g << " mu=" << mu;
    }
  }
}

TEST(BoundaryFunctions, TeixidorBreakpointsAreIntegers) {
  for (std::int64_t g = 3; g <= 20; ++g) {
    for (const Rat& x : t_fn(Genus(g)).breakpoints()) EXPECT_TRUE(x.is_integer());
  }
}

TEST(BMNO, Examples) {
  const Genus g(10);
  EXPECT_TRUE(in_BMNO(g, pt(Rat(13, 2), Rat(19, 10))));
  EXPECT_FALSE(in_BMNO(g, pt(7, 2)));
  EXPECT_FALSE(in_BMNO(g, pt(Rat(13, 2), 2)));
  EXPECT_FALSE(in_BMNO(g, pt(0, Rat(1, 2))));
  EXPECT_FALSE(in_BMNO(g, pt(1, 1)));
  EXPECT_TRUE(in_BMNO(g, pt(1, 1), RegionMode::Semistable));
}

TEST(BMNO, GenusThreeIsTheClosedDescription) {
  const Genus g(3);
  for (const BNPoint& p : grid_P(3, 12)) {
    if (p.mu > 2) continue;
    const ref::Q mu = Q(p.mu), la = Q(p.lambda);
    bool want = mu > 0 && 1 <= mu + 3 * (1 - la) && !(mu == 1 && la == 1);
    if (mu == 2 && la >= 1) want = la == 1;
    ASSERT_EQ(in_BMNO(g, p), want) << p.mu << "," << p.lambda;
  }
}

TEST(BMNO, BelowTopBoundary) {
  for (std::int64_t g = 3; g <= 16; ++g) {
    const Genus G(g);
    const BoundaryFn f = f_fn(G);
    for (const BNPoint& p : grid_P(g, 4)) {
      const Rat top = f.in_domain(p.mu) ? f(p.mu) : p.mu.sign() == 0 ? f.right_limit(p.mu) : f.left_limit(p.mu);
      bool segment = false;
      for (std::int64_t s = 1; s <= g; ++s) {
        const BNPoint q = p.mu <= Rat(g - 1) ? p : serre_dual(G, p);
        segment |= q.mu == Rat(eta_hat(G, s)) && q.lambda <= Rat(s);
      }
      for (RegionMode m : {RegionMode::Stable, RegionMode::NonHyperelliptic, RegionMode::Semistable}) {
        if (m == RegionMode::Semistable && segment) continue;
        if (in_BMNO(G, p, m)) ASSERT_LE(p.lambda, top) << g << " " << p.mu << "," << p.lambda;
      }
    }
  }
}

TEST(BMNO, OffIntegersItIsEverythingInPUnderF) {
  for (std::int64_t g = 3; g <= 16; ++g) {
    const Genus G(g);
    const BoundaryFn f = f_fn(G);
    for (const Rat& mu : farey_range(Rat(0), Rat(2 * g - 2), 5)) {
      if (mu.is_integer()) continue;
      std::vector<Rat> las = farey_range(Rat(0), mu / 2 + 1, 5, true, false);
      las.push_back(f(mu));
      for (const Rat& la : las) {
        const BNPoint p{mu, la};
        ASSERT_EQ(in_BMNO(G, p), in_P(G, p) && la <= f(mu)) << g << " " << mu << "," << la;
      }
    }
  }
}

TEST(BMNO, NonHyperellipticExclusionsAreTheListedPoints) {
  for (std::int64_t g = 4; g <= 16; ++g) {
    const Genus G(g);
    for (const BNPoint& p : grid_P(g, 6)) {
      if (p.mu > Rat(g - 1) || p.mu.sign() == 0) continue;
      if (!in_BMNO(G, p, RegionMode::Semistable) || in_BMNO(G, p, RegionMode::NonHyperelliptic)) continue;
      bool listed = false;
      for (std::int64_t s = 1; s <= g; ++s) {
        const Rat e(eta_hat(G, s));
        listed |= p.mu == e && p.lambda > Rat(s - 1) * (1 + Rat(1, g));
        listed |= p.mu == e + 1 && p.lambda == Rat(s);
      }
      ASSERT_TRUE(listed) << g << " " << p.mu << "," << p.lambda;
    }
  }
}

TEST(BMNO, SemistableAddsTheVerticalSegments) {
  const Genus g(10);
  EXPECT_TRUE(in_BMNO(g, pt(6, 2), RegionMode::Semistable));
  EXPECT_FALSE(in_BMNO(g, pt(6, 2)));
  EXPECT_FALSE(in_BMNO(g, pt(6, Rat(21, 10)), RegionMode::Semistable));
}

TEST(Teixidor, Examples) {
  const Genus g(10);
  EXPECT_TRUE(in_teixidor(g, pt(Rat(13, 2), Rat(3, 2)), Stability::Semistable));
  EXPECT_FALSE(in_teixidor(g, pt(Rat(13, 2), Rat(8, 5)), Stability::Semistable));
  EXPECT_TRUE(in_teixidor(g, pt(5, 1), Stability::Semistable));
  EXPECT_THROW(in_teixidor(g, pt(5, 0), Stability::Stable), std::invalid_argument);
  EXPECT_THROW(in_teixidor(Genus(2), pt(1, Rat(1, 2)), Stability::Stable), std::invalid_argument);
}

TEST(Teixidor, SemistableMatchesConditions) {
  for (std::int64_t g = 3; g <= 14; ++g) {
    for (const BNPoint& p : grid_P(g, 6)) {
      ASSERT_EQ(in_teixidor(Genus(g), p, Stability::Semistable), ref::teixidor_semistable(g, Q(p.mu), Q(p.lambda)))
          << g << " " << p.mu << "," << p.lambda;
    }
  }
}

TEST(Teixidor, StableDiffersOnlyAtIntegerPoints) {
  for (std::int64_t g = 3; g <= 14; ++g) {
    const Genus G(g);
    const BoundaryFn t = t_fn(G);
    for (const BNPoint& p : grid_P(g, 6)) {
      const bool st = in_teixidor(G, p, Stability::Stable);
      const bool ss = in_teixidor(G, p, Stability::Semistable);
      if (st) ASSERT_TRUE(ss);
      if (ss && !st) ASSERT_TRUE(p.mu.is_integer() && p.lambda.is_integer());
      if (ss && p.mu.sign() > 0 && p.mu < Rat(2 * g - 2)) ASSERT_LE(p.lambda, t(p.mu));
    }
  }
}

TEST(Hyperelliptic, Examples) {
  const Genus g(4);
  EXPECT_TRUE(in_BMNOh(g, pt(Rat(7, 2), 2)));
  EXPECT_TRUE(in_hyper_strips(g, pt(Rat(7, 2), 2)));
  EXPECT_TRUE(in_BMNOh(g, pt(2, 1)));
  EXPECT_FALSE(in_hyper_strips(g, pt(3, 2)));
  EXPECT_TRUE(in_hyper_strips(g, pt(3, 2), Stability::Semistable));
  EXPECT_TRUE(in_hyper_strips(g, pt(4, Rat(5, 2)), Stability::Semistable));
  EXPECT_FALSE(in_hyper_strips(g, pt(4, Rat(5, 2))));
}

TEST(Hyperelliptic, BMNOhUnderH) {
  for (std::int64_t g = 3; g <= 12; ++g) {
    const Genus G(g);
    const BoundaryFn h = h_fn(G);
    for (const BNPoint& p : grid_P(g, 6)) {
      if (in_BMNOh(G, p)) ASSERT_LE(p.lambda, h(p.mu));
      ASSERT_EQ(in_BMNOh(G, p), in_BMNOh(G, serre_dual(G, p)));
    }
  }
}

TEST(RegionId, ParseAndOrder) {
  EXPECT_EQ(RegionId::parse("BMNO").kind, RegionKind::BMNO);
  EXPECT_EQ(RegionId::parse("teixidor").kind, RegionKind::TeixidorT);
  const RegionId t = RegionId::parse("tbgn:6:2");
  EXPECT_EQ(t.kind, RegionKind::TranslateBGN);
  EXPECT_EQ(t.d, 6);
  EXPECT_EQ(t.s, 2);
  EXPECT_THROW(RegionId::parse("tm:1:0"), std::invalid_argument);
  EXPECT_THROW(RegionId::parse("tm:x:1"), std::invalid_argument);
  EXPECT_THROW(RegionId::parse("square"), std::invalid_argument);
  EXPECT_LT(RegionId::parse("p"), RegionId::parse("bmno"));
}

TEST(Polyline, PentagonP) {
  const Polyline pl = boundary_polyline(Genus(4), {RegionKind::P, 0, 1});
  std::vector<BNPoint> v;
  for (const Segment& s : pl.segments) v.push_back(s.from);
  EXPECT_EQ(v, (std::vector<BNPoint>{pt(0, 0), pt(0, 1), pt(6, 4), pt(6, 3), pt(3, 0)}));
}

TEST(Polyline, BMNOPassesThroughBreakpoints) {
  for (std::int64_t g : {4, 10, 12, 13}) {
    const Genus G(g);
    for (RegionKind k : {RegionKind::BMNO, RegionKind::TeixidorT, RegionKind::BMNOh}) {
      const RegionId id{k, 0, 1};
      const Polyline pl = boundary_polyline(G, id);
      std::set<std::pair<std::string, std::string>> verts;
      for (const Segment& s : pl.segments) {
        verts.insert({s.from.mu.str(), s.from.lambda.str()});
        verts.insert({s.to.mu.str(), s.to.lambda.str()});
        ASSERT_EQ(s.include_from, in_region(G, id, s.from));
        ASSERT_EQ(s.include_to, in_region(G, id, s.to));
      }
      const BoundaryFn top = region_top(G, id);
      for (const Piece& p : top.pieces()) {
        EXPECT_TRUE(verts.count({p.a.str(), p.at(p.a).str()})) << id.name() << " " << p.a;
        EXPECT_TRUE(verts.count({p.b.str(), p.at(p.b).str()})) << id.name() << " " << p.b;
      }
    }
  }
  const Polyline pl = boundary_polyline(Genus(10), {RegionKind::BMNO, 0, 1});
  bool found = false;
  for (const Segment& s : pl.segments) found |= s.to == pt(6, Rat(3, 2));
  EXPECT_TRUE(found);
}

TEST(Polyline, ExcludedPointsAreMarked) {
  const Polyline pl = boundary_polyline(Genus(10), {RegionKind::BMNO, 0, 1});
  bool seven_two = false;
  for (const Segment& s : pl.segments) {
    if (s.from.mu == 7 && s.from.lambda <= 2 && s.to.lambda >= 2 && s.from.mu == s.to.mu) {
      seven_two |= !s.include_interior || (s.from.lambda == 2 && !s.include_from) || (s.to.lambda == 2 && !s.include_to);
    }
  }
  EXPECT_TRUE(seven_two);
  EXPECT_THROW(boundary_polyline(Genus(10), {RegionKind::BNCurveBelow, 0, 1}), std::invalid_argument);
  EXPECT_THROW(boundary_polyline(Genus(2), {RegionKind::P, 0, 1}), std::invalid_argument);
}
