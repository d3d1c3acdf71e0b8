#include "bnloci/regions.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace bnloci {

namespace {

Rat gm1(Genus g) { return Rat(g.value() - 1); }

void need_g3(Genus g) { g.require_at_least(3, "region construction"); }

void need_s(std::int64_t s) {
  if (s < 1) throw std::invalid_argument("translate parameter s must be at least 1");
}

// lambda bound of BGN' and M' at slope mu
Rat base_top(Genus g, const Rat& mu) { return (mu + gm1(g)) / Rat(g.value()); }

enum CacheKey { kTiles, kIndex, kF, kT, kH };

template <CacheKey Key, class T, class Make>
std::shared_ptr<const T> cached(std::int64_t g, Make make) {
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const T>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g);
  if (it != cache.end()) return it->second;
  auto made = std::make_shared<const T>(make());
  cache.emplace(g, made);
  return made;
}

}  // namespace

std::string RegionId::name() const {
  switch (kind) {
    case RegionKind::P: return "P";
    case RegionKind::R: return "R";
    case RegionKind::BGN: return "BGN";
    case RegionKind::M: return "M";
    case RegionKind::TranslateBGN: return "T(" + std::to_string(d) + "," + std::to_string(s) + ")BGN";
    case RegionKind::TranslateM: return "T(" + std::to_string(d) + "," + std::to_string(s) + ")M";
    case RegionKind::BMNO: return "BMNO";
    case RegionKind::TeixidorT: return "T";
    case RegionKind::BMNOh: return "BMNOh";
    case RegionKind::BNCurveBelow: return "BNCurveBelow";
  }
  return "?";
}

RegionId RegionId::parse(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "p") return {RegionKind::P};
  if (t == "r") return {RegionKind::R};
  if (t == "bgn") return {RegionKind::BGN};
  if (t == "m") return {RegionKind::M};
  if (t == "bmno") return {RegionKind::BMNO};
  if (t == "teixidor" || t == "t") return {RegionKind::TeixidorT};
  if (t == "bmnoh") return {RegionKind::BMNOh};
  if (t == "bncurve") return {RegionKind::BNCurveBelow};
  const auto c1 = t.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : t.find(':', c1 + 1);
  if (c2 != std::string::npos) {
    const std::string head = t.substr(0, c1);
    RegionId id;
    if (head == "tbgn") id.kind = RegionKind::TranslateBGN;
    else if (head == "tm") id.kind = RegionKind::TranslateM;
    else throw std::invalid_argument("unknown region: " + text);
    try {
      id.d = std::stoll(t.substr(c1 + 1, c2 - c1 - 1));
      id.s = std::stoll(t.substr(c2 + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad translate parameters: " + text);
    }
    need_s(id.s);
    return id;
  }
  throw std::invalid_argument("unknown region: " + text);
}

bool in_P(Genus g, const BNPoint& p) {
  const Rat& mu = p.mu;
  const Rat& la = p.lambda;
  return mu < la + gm1(g) && mu >= 2 * la - 2 && mu.sign() >= 0 && mu <= 2 * gm1(g) && la.sign() > 0;
}

bool in_R(Genus g, const BNPoint& p) { return p.mu <= gm1(g) && in_P(g, p); }

bool in_BGN(Genus g, const BNPoint& p, RegionMode mode) {
  need_g3(g);
  if (p.lambda.sign() <= 0 || p.mu > 1) return false;
  if (mode == RegionMode::Semistable) {
    if (p.mu.sign() < 0) return false;
  } else {
    if (p.mu.sign() <= 0) return false;
    if (p.mu == 1 && p.lambda == 1) return false;
  }
  return p.lambda <= base_top(g, p.mu);
}

bool in_M(Genus g, const BNPoint& p, RegionMode mode) {
  need_g3(g);
  if (p.lambda.sign() <= 0 || p.mu <= 1 || p.mu > 2) return false;
  if (p.mu == 2 && mode == RegionMode::Stable) return p.lambda < 1;
  return p.lambda <= base_top(g, p.mu);
}

BNPoint apply_T(std::int64_t d, std::int64_t s, const BNPoint& p) {
  need_s(s);
  return {p.mu + d, p.lambda * s};
}

BNPoint apply_T_inverse(std::int64_t d, std::int64_t s, const BNPoint& p) {
  need_s(s);
  return {p.mu - d, p.lambda / Rat(s)};
}

BNPoint apply_U(Genus g, std::int64_t d, std::int64_t s, const BNPoint& p) {
  need_s(s);
  return {2 * gm1(g) - p.mu - d, p.lambda * s + gm1(g) - p.mu - d};
}

bool in_translate_BGN(Genus g, std::int64_t d, std::int64_t s, const BNPoint& p, RegionMode mode) {
  return in_BGN(g, apply_T_inverse(d, s, p), mode);
}

bool in_translate_M(Genus g, std::int64_t d, std::int64_t s, const BNPoint& p, RegionMode mode) {
  return in_M(g, apply_T_inverse(d, s, p), mode);
}

bool in_dual_translate_BGN(Genus g, std::int64_t d, std::int64_t s, const BNPoint& p, RegionMode mode) {
  return in_translate_BGN(g, d, s, serre_dual(g, p), mode);
}

bool in_dual_translate_M(Genus g, std::int64_t d, std::int64_t s, const BNPoint& p, RegionMode mode) {
  return in_translate_M(g, d, s, serre_dual(g, p), mode);
}

static std::vector<Tile> make_tiles(Genus g) {
  const std::int64_t G = g.value();
  std::vector<Tile> tiles;
  for (std::int64_t s = 1; eta_hat(g, s) <= G - 2; ++s) {
    const std::int64_t e = eta_hat(g, s);
    const std::int64_t e_next = eta_hat(g, s + 1);
    tiles.push_back({Tile::Kind::TranslateBGN, e, s});
    for (std::int64_t d = e; d <= std::min(e_next - 2, G - 3); ++d) {
      tiles.push_back({Tile::Kind::TranslateM, d, s});
    }
    if (e_next <= G - 1) {
      // U_{d,s'}(BGN) with U(1,1) = (e_next - 1, s)
      tiles.push_back({Tile::Kind::DualBGN, 2 * G - 2 - e_next, s + G - e_next});
    }
  }
  return tiles;
}

std::vector<Tile> bmno_tiles(Genus g) {
  need_g3(g);
  return *cached<kTiles, std::vector<Tile>>(g.value(), [&] { return make_tiles(g); });
}

bool in_tile(Genus g, const Tile& t, const BNPoint& p, RegionMode mode) {
  switch (t.kind) {
    case Tile::Kind::TranslateBGN: return in_translate_BGN(g, t.d, t.s, p, mode);
    case Tile::Kind::TranslateM: return in_translate_M(g, t.d, t.s, p, mode);
    case Tile::Kind::DualBGN: return in_R(g, p) && in_dual_translate_BGN(g, t.d, t.s, p, mode);
  }
  return false;
}

static BoundaryFn make_f(Genus g) {
  const std::int64_t G = g.value();
  std::vector<Piece> left;
  std::int64_t s = 1;
  for (std::int64_t m = 1; m <= G - 1; ++m) {
    while (eta_hat(g, s + 1) <= m - 1) ++s;
    const std::int64_t e = eta_hat(g, s);
    const std::int64_t e_next = eta_hat(g, s + 1);
    Rat slope, at_left;  // at_left: value at mu = m - 1
    if (m - 1 == e) {
      slope = Rat(s, G);
      at_left = Rat(s) - slope;
    } else if (e_next == m) {
      slope = Rat(e_next - s, G);
      at_left = Rat(s);
    } else {
      slope = Rat(s, G);
      at_left = Rat(s);
    }
    left.push_back({Rat(m - 1), Rat(m), false, true, slope, at_left - slope * Rat(m - 1)});
  }
  std::vector<Piece> pieces = left;
  const Rat two_g2(2 * G - 2);
  for (auto it = left.rbegin(); it != left.rend(); ++it) {
    Piece q;
    q.a = two_g2 - it->b;
    q.b = two_g2 - it->a;
    q.a_closed = q.a != Rat(G - 1);
    q.b_closed = false;
    q.slope = 1 - it->slope;
    q.intercept = it->slope * two_g2 + it->intercept - Rat(G - 1);
    pieces.push_back(q);
  }
  return BoundaryFn(std::move(pieces));
}

static BoundaryFn make_t(Genus g) {
  const std::int64_t G = g.value();
  std::vector<Piece> pieces;
  std::int64_t s = 1;
  for (std::int64_t m = 1; m <= 2 * G - 2; ++m) {
    while (s < G && eta_hat_prime(g, s + 1) <= m - 1) ++s;
    Piece q{Rat(m - 1), Rat(m), false, m != 2 * G - 2, Rat(0), Rat(s)};
    if (eta_hat_prime(g, s) == m - 1) {
      q.slope = 1;
      q.intercept = Rat(s - m);
    }
    pieces.push_back(q);
  }
  return BoundaryFn(std::move(pieces));
}

static BoundaryFn make_h(Genus g) {
  const std::int64_t G = g.value();
  std::vector<Piece> pieces;
  for (std::int64_t s = 1; s <= G - 1; ++s) {
    const Rat slope(s, G);
    pieces.push_back({Rat(2 * s - 2), Rat(2 * s), false, s != G - 1, slope, Rat(s) - slope * Rat(2 * s - 1)});
  }
  return BoundaryFn(std::move(pieces));
}

BoundaryFn f_fn(Genus g) {
  need_g3(g);
  return *cached<kF, BoundaryFn>(g.value(), [&] { return make_f(g); });
}

BoundaryFn t_fn(Genus g) {
  need_g3(g);
  return *cached<kT, BoundaryFn>(g.value(), [&] { return make_t(g); });
}

BoundaryFn h_fn(Genus g) {
  need_g3(g);
  return *cached<kH, BoundaryFn>(g.value(), [&] { return make_h(g); });
}

namespace {

struct TileIndex {
  std::vector<Tile> tiles;
  // bucket b lists the tiles meeting the strip b <= mu <= b+1
  std::vector<std::vector<std::size_t>> buckets;
};

TileIndex make_index(Genus g) {
  TileIndex ix{make_tiles(g), {}};
  const std::int64_t G = g.value();
  ix.buckets.resize(static_cast<std::size_t>(G));
  for (std::size_t i = 0; i < ix.tiles.size(); ++i) {
    const Tile& t = ix.tiles[i];
    std::int64_t lo = t.d;
    if (t.kind == Tile::Kind::TranslateM) lo = t.d + 1;
    if (t.kind == Tile::Kind::DualBGN) lo = 2 * G - 3 - t.d;
    for (std::int64_t b = std::max<std::int64_t>(0, lo - 1); b <= std::min(lo + 1, G - 1); ++b) {
      ix.buckets[static_cast<std::size_t>(b)].push_back(i);
    }
  }
  return ix;
}

bool bmno_left_part(Genus g, const BNPoint& q, RegionMode mode, const TileIndex& ix) {
  if (!in_R(g, q)) return false;
  const std::size_t b = static_cast<std::size_t>(q.mu.floor().to_int64());
  if (b < ix.buckets.size()) {
    for (std::size_t i : ix.buckets[b]) {
      if (in_tile(g, ix.tiles[i], q, mode)) return true;
    }
  }
  if (g.value() == 3 && q.mu == 2 && q.lambda == 1) return true;
  if (mode == RegionMode::Semistable && q.mu.is_integer()) {
    // whole segments {(eta^(s), lambda): 0 < lambda <= s}
    const std::int64_t m = q.mu.to_int64();
    for (std::int64_t s = 1; eta_hat(g, s) <= m; ++s) {
      if (eta_hat(g, s) == m && q.lambda <= Rat(s)) return true;
    }
  }
  return false;
}

}  // namespace

bool in_BMNO(Genus g, const BNPoint& p, RegionMode mode) {
  need_g3(g);
  if (!in_P(g, p)) return false;
  const auto ix = cached<kIndex, TileIndex>(g.value(), [&] { return make_index(g); });
  return bmno_left_part(g, p, mode, *ix) || bmno_left_part(g, serre_dual(g, p), mode, *ix);
}

static bool teixidor_conditions(Genus g, const BNPoint& p) {
  const Rat fm = p.mu.frac();
  const Rat fl = p.lambda.frac();
  if (fl.sign() != 0 && fl <= fm && rho_tilde(g, {p.mu.ceil(), p.lambda.ceil()}).sign() >= 0) return true;
  if (fl > fm && rho_tilde(g, {p.mu.floor(), p.lambda.ceil()}).sign() >= 0) return true;
  if (fl.sign() == 0 && rho_tilde(g, {p.mu.floor(), p.lambda}).sign() >= 0) return true;
  return false;
}

static bool teixidor_exception(Genus g, const BNPoint& p) {
  return p.mu.is_integer() && p.lambda.is_integer() && rho_tilde(g, {p.mu - 1, p.lambda}).sign() < 0;
}

bool in_teixidor(Genus g, const BNPoint& p, Stability m) {
  need_g3(g);
  if (p.lambda.sign() <= 0) throw std::invalid_argument("Teixidor membership needs lambda > 0");
  if (!in_P(g, p) || !teixidor_conditions(g, p)) return false;
  if (m == Stability::Semistable) return true;
  // A stable exception is still covered when its Serre dual is not one.
  const BNPoint q = serre_dual(g, p);
  return !(teixidor_exception(g, p) && teixidor_exception(g, q));
}

bool in_BMNOh(Genus g, const BNPoint& p) {
  need_g3(g);
  if (!in_P(g, p)) return false;
  const std::int64_t s = (p.mu / Rat(2)).ceil().to_int64();
  if (s < 1 || s > g.value() - 1) return false;
  const BNPoint q = apply_T_inverse(2 * s - 2, s, p);
  return in_BGN(g, q) || in_M(g, q) || (q.mu == 2 && q.lambda == 1);
}

bool in_hyper_strips(Genus g, const BNPoint& p, Stability m) {
  need_g3(g);
  if (!in_P(g, p)) return false;
  const Rat& mu = p.mu;
  const Rat& la = p.lambda;
  for (std::int64_t s = 1; s <= g.value() - 1; ++s) {
    if (mu > Rat(2 * s - 1) && mu <= Rat(2 * s) && la <= Rat(s)) return true;
    if (mu >= Rat(2 * s - 2) && mu < Rat(2 * s - 1) && la <= mu - (s - 1)) return true;
    if (m == Stability::Semistable) {
      if (mu == Rat(2 * s - 1) && la == Rat(s)) return true;
      if (mu == Rat(2 * s) && la > Rat(s) && la <= Rat(s + 1)) return true;
    }
  }
  return false;
}

bool below_bn_curve(Genus g, const BNPoint& p) {
  return in_P(g, p) && rho_tilde(g, p).sign() >= 0;
}

bool in_region(Genus g, const RegionId& id, const BNPoint& p, RegionMode mode) {
  const Stability st = mode == RegionMode::Semistable ? Stability::Semistable : Stability::Stable;
  switch (id.kind) {
    case RegionKind::P: return in_P(g, p);
    case RegionKind::R: return in_R(g, p);
    case RegionKind::BGN: return in_BGN(g, p, mode);
    case RegionKind::M: return in_M(g, p, mode);
    case RegionKind::TranslateBGN: return in_translate_BGN(g, id.d, id.s, p, mode);
    case RegionKind::TranslateM: return in_translate_M(g, id.d, id.s, p, mode);
    case RegionKind::BMNO: return in_BMNO(g, p, mode);
    case RegionKind::TeixidorT: return p.lambda.sign() > 0 && in_teixidor(g, p, st);
    case RegionKind::BMNOh: return in_BMNOh(g, p);
    case RegionKind::BNCurveBelow: return below_bn_curve(g, p);
  }
  return false;
}

BoundaryFn region_top(Genus g, const RegionId& id) {
  switch (id.kind) {
    case RegionKind::BMNO: return f_fn(g);
    case RegionKind::TeixidorT: return t_fn(g);
    case RegionKind::BMNOh: return h_fn(g);
    default: throw std::invalid_argument("region " + id.name() + " has no boundary function");
  }
}

}  // namespace bnloci
