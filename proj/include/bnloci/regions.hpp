#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnloci/arith.hpp"
#include "bnloci/boundary_fn.hpp"

namespace bnloci {

enum class Membership { Out, In };
inline Membership membership(bool in) { return in ? Membership::In : Membership::Out; }

enum class Stability { Stable, Semistable };

/// Which boundary points of the base trapezia count as BN.
///  Stable: as for an arbitrary curve.
///  NonHyperelliptic: the right-hand edge of M at mu=2 is restored.
///  Semistable: every boundary edge is included, and so is (1,1).
enum class RegionMode { Stable, NonHyperelliptic, Semistable };

enum class RegionKind { P, R, BGN, M, TranslateBGN, TranslateM, BMNO, TeixidorT, BMNOh, BNCurveBelow };

struct RegionId {
  RegionKind kind = RegionKind::P;
  std::int64_t d = 0;
  std::int64_t s = 1;

  std::string name() const;
  /// Accepts p, r, bgn, m, bmno, teixidor, bmnoh, bncurve, tbgn:D:S, tm:D:S.
  static RegionId parse(const std::string& text);
  friend auto operator<=>(const RegionId&, const RegionId&) = default;
};

bool in_P(Genus g, const BNPoint& p);
bool in_R(Genus g, const BNPoint& p);
bool in_BGN(Genus g, const BNPoint& p, RegionMode mode = RegionMode::Stable);
bool in_M(Genus g, const BNPoint& p, RegionMode mode = RegionMode::Stable);

BNPoint apply_T(std::int64_t d, std::int64_t s, const BNPoint& p);
BNPoint apply_T_inverse(std::int64_t d, std::int64_t s, const BNPoint& p);
BNPoint apply_U(Genus g, std::int64_t d, std::int64_t s, const BNPoint& p);

bool in_translate_BGN(Genus g, std::int64_t d, std::int64_t s, const BNPoint& p,
                      RegionMode mode = RegionMode::Stable);
bool in_translate_M(Genus g, std::int64_t d, std::int64_t s, const BNPoint& p,
                    RegionMode mode = RegionMode::Stable);
/// U_{d,s}(BGN) and U_{d,s}(M), not intersected with R.
bool in_dual_translate_BGN(Genus g, std::int64_t d, std::int64_t s, const BNPoint& p,
                           RegionMode mode = RegionMode::Stable);
bool in_dual_translate_M(Genus g, std::int64_t d, std::int64_t s, const BNPoint& p,
                         RegionMode mode = RegionMode::Stable);

/// A trapezium in the construction of BMNO inside R.
struct Tile {
  enum class Kind { TranslateBGN, TranslateM, DualBGN };
  Kind kind;
  std::int64_t d;
  std::int64_t s;
  friend bool operator==(const Tile&, const Tile&) = default;
};

/// The tiles covering BMNO within R, in construction order. A DualBGN tile is
/// U_{d,s}(BGN) cut down to R and sits next to the M tile it enlarges.
std::vector<Tile> bmno_tiles(Genus g);
bool in_tile(Genus g, const Tile& t, const BNPoint& p, RegionMode mode = RegionMode::Stable);

BoundaryFn f_fn(Genus g);
BoundaryFn t_fn(Genus g);
BoundaryFn h_fn(Genus g);

bool in_BMNO(Genus g, const BNPoint& p, RegionMode mode = RegionMode::Stable);
bool in_teixidor(Genus g, const BNPoint& p, Stability m);
bool in_BMNOh(Genus g, const BNPoint& p);
bool in_hyper_strips(Genus g, const BNPoint& p, Stability m = Stability::Stable);
bool below_bn_curve(Genus g, const BNPoint& p);

bool in_region(Genus g, const RegionId& id, const BNPoint& p, RegionMode mode = RegionMode::Stable);

/// Top boundary function of a region, where it has one.
BoundaryFn region_top(Genus g, const RegionId& id);

struct Segment {
  BNPoint from;
  BNPoint to;
  bool include_from = false;
  bool include_to = false;
  bool include_interior = false;
};

struct Polyline {
  RegionId region;
  std::int64_t genus = 0;
  std::vector<Segment> segments;
};

/// Outline of a region plus, for BMNO and T, the excluded vertical pieces
/// inside it. Inclusion flags come from evaluating membership.
Polyline boundary_polyline(Genus g, const RegionId& id, RegionMode mode = RegionMode::Stable);

}  // namespace bnloci
