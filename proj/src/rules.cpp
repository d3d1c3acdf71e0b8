#include "rules.hpp"

#include <algorithm>
#include <tuple>

namespace bnloci::detail {

namespace {

using P = std::vector<std::pair<std::string, Rat>>;

void add(std::vector<Finding>& out, Outcome o, const char* rule, P params, const char* cite) {
  out.push_back({o, Evidence{rule, std::move(params), cite}});
}

constexpr const char* kTrivialCite = "negative degree has no sections; k <= 0 imposes no condition";
constexpr const char* kRRCite = "Riemann-Roch: h0 >= d - n(g-1) for every bundle";
constexpr const char* kSlopeCite = "design decision: h1 vanishes for semistable bundles of slope above 2g-2";
constexpr const char* kCliffordCite = "Clifford bound for semistable bundles of slope in [0, 2g-2]";
constexpr const char* kEdgesStableCite = "only O at slope 0 and only K at slope 2g-2 among stable bundles in P";
constexpr const char* kEdgesSemiCite = "semistable bundles exist at every point of the two vertical edges of P";
constexpr const char* kReCite = "Re's bound on non-hyperelliptic curves for slopes in [1, 2g-3]";
constexpr const char* kLineCite = "classical Brill-Noether theory for line bundles";
constexpr const char* kLineGenericCite = "Brill-Noether theorem for a generic curve (converse direction)";
constexpr const char* kLineHyperCite = "powers of the hyperelliptic bundle twisted by effective divisors";
constexpr const char* kBGNCite = "criterion for slopes in (0,1]: n <= d + (n-k)g, the point (1,1) excluded";
constexpr const char* kMCite = "criterion for slopes in (1,2): n <= d + (n-k)g";
constexpr const char* kMExtCite = "slope (1,2) criterion extended to slope 2 on non-hyperelliptic curves";
constexpr const char* kMSemiCite = "semistable extension to the boundary at slope 2";
constexpr const char* kTensorACite = "tensoring a bundle of slope in (0,2) by an effective line bundle";
constexpr const char* kTensorBCite = "tensoring a bundle of slope in (0,2) by a line bundle with s sections";
constexpr const char* kIntegralCite = "integral slope case of the tensor construction with d''=n";
constexpr const char* kBandCite = "non-integral slopes below lambda = s beyond eta^(s)+1";
constexpr const char* kTeixidorCite = "Teixidor parallelograms";
constexpr const char* kHyperFCite = "hyperelliptic bound h0 <= F_s(n,d), via Jordan-Holder for semistable";
constexpr const char* kHyperEvenCite = "hyperelliptic bound h0 <= sn at slope 2s unless E is L^s";
constexpr const char* kHyperPowerCite = "the s-th power of the hyperelliptic line bundle";
constexpr const char* kStripCite = "hyperelliptic strips lying in the BN locus";
constexpr const char* kBMNOhCite = "hyperelliptic translates T_{2s-2,s} of BGN and M";
constexpr const char* kOddOnlyOneCite = "on hyperelliptic curves (2s-1,s) is realized by line bundles alone";
constexpr const char* kOddBelowCite = "stable bundles of slope 2s-1 with h0 = sn-1 on hyperelliptic curves";
constexpr const char* kOddSemiCite = "semistable sums of L^{s-1}(p) at (2s-1,s)";
constexpr const char* kSharpGapCite = "hyperelliptic gap: h0 = 2n+2l+1 impossible when g/2 <= l' < g-1";
constexpr const char* kSharpAttainedCite = "hyperelliptic gap case l' = g-1: F* x L^2 attains 2n+2l+1";
constexpr const char* kKnownCite = "genus 3 non-hyperelliptic: only O and E_K lie in R beyond the criterion";

Rat R(std::int64_t v) { return Rat(v); }

bool nonempty_crit(std::int64_t n, std::int64_t d, std::int64_t k, std::int64_t g) {
  return n <= d + (n - k) * g;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

void rule_riemann_roch(const Query& q, std::vector<Finding>& out) {
  const auto& [n, d, k] = std::tuple(q.t.n, q.t.d, q.t.k);
  if (k <= d - n * (q.g.value() - 1)) {
    add(out, Outcome::WholeSpace, "rule_riemann_roch", {{"bound", R(d - n * (q.g.value() - 1))}}, kRRCite);
  }
}

void rule_slope_above_canonical(const Query& q, std::vector<Finding>& out) {
  const std::int64_t g = q.g.value();
  const auto& t = q.t;
  if (t.d > t.n * (2 * g - 2) && t.k > t.d - t.n * (g - 1)) {
    add(out, Outcome::Empty, "rule_slope_above_canonical", {{"bound", R(t.d - t.n * (g - 1))}}, kSlopeCite);
  }
}

void rule_clifford(const Query& q, std::vector<Finding>& out) {
  const std::int64_t g = q.g.value();
  const auto& t = q.t;
  if (t.d >= 0 && t.d <= t.n * (2 * g - 2) && t.d < 2 * t.k - 2 * t.n) {
    add(out, Outcome::Empty, "rule_clifford", {}, kCliffordCite);
  }
}

void rule_edges(const Query& q, std::vector<Finding>& out) {
  const std::int64_t g = q.g.value();
  const auto& t = q.t;
  const bool semi = q.m == Stability::Semistable;
  if (t.d == 0) {
    if (semi) {
      if (t.k <= t.n) add(out, Outcome::NonEmpty, "rule_edges", {{"mu", R(0)}}, kEdgesSemiCite);
    } else if (t.n == 1 && t.k == 1) {
      add(out, Outcome::NonEmpty, "rule_edges", {{"mu", R(0)}}, kEdgesStableCite);
    } else {
      add(out, Outcome::Empty, "rule_edges", {{"mu", R(0)}}, kEdgesStableCite);
    }
  } else if (t.d == t.n * (2 * g - 2) && t.k > t.n * (g - 1)) {
    const Rat mu(2 * g - 2);
    if (semi) {
      if (t.k <= t.n * g) add(out, Outcome::NonEmpty, "rule_edges", {{"mu", mu}}, kEdgesSemiCite);
    } else if (t.n == 1 && t.k == g) {
      add(out, Outcome::NonEmpty, "rule_edges", {{"mu", mu}}, kEdgesStableCite);
    } else {
      add(out, Outcome::Empty, "rule_edges", {{"mu", mu}}, kEdgesStableCite);
    }
  }
}

void rule_re(const Query& q, std::vector<Finding>& out) {
  const std::int64_t g = q.g.value();
  const auto& t = q.t;
  if (!non_hyperelliptic(q.g, q.c)) return;
  if (t.d >= t.n && t.d <= t.n * (2 * g - 3) && t.d < 2 * t.k - t.n) {
    add(out, Outcome::Empty, "rule_re", {}, kReCite);
  }
}

void rule_line_bundles(const Query& q, std::vector<Finding>& out) {
  const auto& t = q.t;
  if (t.n != 1 || t.d < 0) return;
  const Int r = rho(q.g, t);
  const Rat rr(r);
  if (r >= 0) {
    add(out, Outcome::NonEmpty, "rule_line_bundles", {{"rho", rr}}, kLineCite);
  } else if (q.c == CurveClass::GenericCurve) {
    add(out, Outcome::Empty, "rule_line_bundles", {{"rho", rr}}, kLineGenericCite);
  }
  if (q.c == CurveClass::Hyperelliptic && t.k <= q.g.value() && t.d >= 2 * t.k - 2) {
    add(out, Outcome::NonEmpty, "rule_line_bundles", {{"s", R(t.k)}}, kLineHyperCite);
  }
}

void rule_BGN(const Query& q, std::vector<Finding>& out) {
  const auto& [n, d, k] = std::tuple(q.t.n, q.t.d, q.t.k);
  if (d <= 0 || d > n) return;
  const std::int64_t g = q.g.value();
  if (!nonempty_crit(n, d, k, g)) {
    add(out, Outcome::Empty, "rule_BGN", {}, kBGNCite);
  } else if (d == n && k == n && q.m == Stability::Stable) {
    if (n == 1) add(out, Outcome::NonEmpty, "rule_BGN", {{"point", R(1)}}, kBGNCite);
    else add(out, Outcome::Empty, "rule_BGN", {{"point", R(1)}}, kBGNCite);
  } else {
    add(out, Outcome::NonEmpty, "rule_BGN", {}, kBGNCite);
  }
}

void rule_M(const Query& q, std::vector<Finding>& out) {
  const auto& [n, d, k] = std::tuple(q.t.n, q.t.d, q.t.k);
  const std::int64_t g = q.g.value();
  if (d > n && d < 2 * n) {
    if (nonempty_crit(n, d, k, g)) add(out, Outcome::NonEmpty, "rule_M", {}, kMCite);
    else add(out, Outcome::Empty, "rule_M", {}, kMCite);
  } else if (d == 2 * n && nonempty_crit(n, d, k, g)) {
    if (q.m == Stability::Semistable) add(out, Outcome::NonEmpty, "rule_M", {{"mu", R(2)}}, kMSemiCite);
    else if (non_hyperelliptic(q.g, q.c)) add(out, Outcome::NonEmpty, "rule_M", {{"mu", R(2)}}, kMExtCite);
  }
}

// Tensor construction shared by the A and B variants and the integral case.
void rule_tensor(const Query& q, std::vector<Finding>& out) {
  const auto& [n, d, k] = std::tuple(q.t.n, q.t.d, q.t.k);
  const std::int64_t g = q.g.value();
  if (d < 0) return;
  const bool semi = q.m == Stability::Semistable;
  const bool mu2 = semi || non_hyperelliptic(q.g, q.c);
  bool fired_a = false, fired_b = false, fired_int = false;
  for (std::int64_t s = 1; s <= g; ++s) {
    std::int64_t dmin = eta_hat(q.g, s);
    if (q.c == CurveClass::Hyperelliptic && g >= 3) dmin = std::min(dmin, 2 * s - 2);
    const std::int64_t k0 = ceil_div(k, s);
    for (std::int64_t dp = std::max<std::int64_t>({0, dmin, d / n - 2}); dp <= d / n; ++dp) {
      const std::int64_t dpp = d - n * dp;
      bool ok = false;
      if (dpp > 0 && dpp < 2 * n) {
        ok = nonempty_crit(n, dpp, k0, g) && (semi || !(dpp == n && k0 == n));
      } else if (dpp == 0) {
        ok = semi && k0 <= n;
      } else if (dpp == 2 * n) {
        ok = mu2 && nonempty_crit(n, dpp, k0, g);
      }
      if (!ok) continue;
      P params{{"d'", R(dp)}, {"d''", R(dpp)}, {"s", R(s)}, {"k0", R(k0)}};
      if (s == 1 && !fired_a) {
        add(out, Outcome::NonEmpty, "rule_tensor_A", params, kTensorACite);
        fired_a = true;
      }
      if (s > 1 && !fired_b) {
        add(out, Outcome::NonEmpty, "rule_tensor_B", params, kTensorBCite);
        fired_b = true;
      }
      if (dpp == n && k0 < n && !fired_int) {
        add(out, Outcome::NonEmpty, "rule_integral_slope", params, kIntegralCite);
        fired_int = true;
      }
    }
  }
}

void rule_nonintegral_band(const Query& q, std::vector<Finding>& out) {
  if (q.p.mu.is_integer() || q.t.d < 0) return;
  for (std::int64_t s = 1; s <= q.g.value(); ++s) {
    if (q.p.mu > Rat(eta_hat(q.g, s) + 1) && q.p.lambda <= Rat(s)) {
      add(out, Outcome::NonEmpty, "rule_nonintegral_band", {{"s", R(s)}}, kBandCite);
      return;
    }
  }
}

void rule_teixidor(const Query& q, std::vector<Finding>& out) {
  if (q.g.value() < 3 || q.t.k <= 0) return;
  if (in_teixidor(q.g, q.p, q.m)) {
    add(out, Outcome::NonEmpty, "rule_teixidor",
        {{"floor_mu", q.p.mu.floor()}, {"floor_lambda", q.p.lambda.floor()}}, kTeixidorCite);
  }
}

bool hyper(const Query& q) { return q.c == CurveClass::Hyperelliptic && q.g.value() >= 3; }

void rule_hyper_bounds(const Query& q, std::vector<Finding>& out) {
  if (!hyper(q)) return;
  const auto& [n, d, k] = std::tuple(q.t.n, q.t.d, q.t.k);
  const std::int64_t g = q.g.value();
  for (std::int64_t s = 0; s <= g; ++s) {
    if (d > (2 * s - 2) * n && d < 2 * s * n) {
      const Rat F = hyper_bound_F(q.g, s, n, d);
      if (Rat(k) > F) add(out, Outcome::Empty, "rule_hyper_bounds", {{"s", R(s)}, {"F", F}}, kHyperFCite);
    }
    if (d == 2 * s * n && s <= g - 1 && q.m == Stability::Stable) {
      if (n == 1 && k == s + 1) {
        add(out, Outcome::NonEmpty, "rule_hyper_bounds", {{"s", R(s)}}, kHyperPowerCite);
      } else if (k > s * n) {
        add(out, Outcome::Empty, "rule_hyper_bounds", {{"s", R(s)}, {"bound", R(s * n)}}, kHyperEvenCite);
      }
    }
  }
}

void rule_hyper_strips(const Query& q, std::vector<Finding>& out) {
  if (!hyper(q)) return;
  const auto& [n, d, k] = std::tuple(q.t.n, q.t.d, q.t.k);
  const std::int64_t g = q.g.value();
  if (in_hyper_strips(q.g, q.p, q.m)) {
    add(out, Outcome::NonEmpty, "rule_hyper_strips", {}, kStripCite);
  }
  if (in_BMNOh(q.g, q.p)) {
    const std::int64_t s = (q.p.mu / Rat(2)).ceil().to_int64();
    if (k % s == 0) add(out, Outcome::NonEmpty, "rule_hyper_strips", {{"s", R(s)}}, kBMNOhCite);
  }
  for (std::int64_t s = 1; s <= g - 1; ++s) {
    if (d != (2 * s - 1) * n) continue;
    if (k <= s * n - 1) {
      add(out, Outcome::NonEmpty, "rule_hyper_strips", {{"s", R(s)}}, kOddBelowCite);
    } else if (k == s * n) {
      if (n == 1) add(out, Outcome::NonEmpty, "rule_hyper_strips", {{"s", R(s)}}, kOddOnlyOneCite);
      else if (q.m == Stability::Stable) add(out, Outcome::Empty, "rule_hyper_strips", {{"s", R(s)}}, kOddOnlyOneCite);
      else add(out, Outcome::NonEmpty, "rule_hyper_strips", {{"s", R(s)}}, kOddSemiCite);
    }
  }
}

void rule_hyper_sharp_gap(const Query& q, std::vector<Finding>& out) {
  if (!hyper(q) || q.g.value() < 4 || q.m != Stability::Stable) return;
  const auto& [n, d, k] = std::tuple(q.t.n, q.t.d, q.t.k);
  const std::int64_t g = q.g.value();
  if (d <= 3 * n || d >= 4 * n) return;
  const std::int64_t l = (d - 3 * n) / g;
  const std::int64_t lp = (d - 3 * n) % g;
  const std::int64_t top = 2 * n + 2 * l + 1;
  P params{{"l", R(l)}, {"l'", R(lp)}};
  if (2 * lp >= g && lp < g - 1 && k >= top) {
    add(out, Outcome::Empty, "rule_hyper_sharp_gap", params, kSharpGapCite);
  }
  if (lp == g - 1 && k <= top) {
    add(out, Outcome::NonEmpty, "rule_hyper_sharp_attained", params, kSharpAttainedCite);
  }
}

void rule_known_points(const Query& q, std::vector<Finding>& out) {
  if (q.g.value() != 3 || !non_hyperelliptic(q.g, q.c)) return;
  const auto& [n, d, k] = std::tuple(q.t.n, q.t.d, q.t.k);
  if (n == 2 && d == 4 && k == 3) {
    add(out, Outcome::NonEmpty, "rule_known_points", {}, kKnownCite);
  } else if (q.m == Stability::Stable && d == 2 * n && 3 * k > 4 * n && k <= 2 * n) {
    add(out, Outcome::Empty, "rule_known_points", {}, kKnownCite);
  }
}

}  // namespace

bool non_hyperelliptic(Genus g, CurveClass c) {
  return c == CurveClass::NonHyperelliptic || (c == CurveClass::GenericCurve && g.value() >= 3);
}

const std::vector<RuleSpec>& direct_rules() {
  static const std::vector<RuleSpec> rules{
      {"rule_riemann_roch", rule_riemann_roch},
      {"rule_slope_above_canonical", rule_slope_above_canonical},
      {"rule_clifford", rule_clifford},
      {"rule_edges", rule_edges},
      {"rule_re", rule_re},
      {"rule_hyper_bounds", rule_hyper_bounds},
      {"rule_hyper_sharp_gap", rule_hyper_sharp_gap},
      {"rule_known_points", rule_known_points},
      {"rule_line_bundles", rule_line_bundles},
      {"rule_BGN", rule_BGN},
      {"rule_M", rule_M},
      {"rule_tensor", rule_tensor},
      {"rule_nonintegral_band", rule_nonintegral_band},
      {"rule_teixidor", rule_teixidor},
      {"rule_hyper_strips", rule_hyper_strips},
  };
  return rules;
}

std::vector<Finding> run_direct(Genus g, const Triple& t, CurveClass c, Stability m) {
  std::vector<Finding> out;
  if (t.k <= 0) {
    add(out, Outcome::WholeSpace, "rule_trivial", {}, kTrivialCite);
    return out;
  }
  if (t.d < 0) {
    add(out, Outcome::Empty, "rule_trivial", {}, kTrivialCite);
    return out;
  }
  const Query q{g, t, c, m, t.point()};
  for (const RuleSpec& r : direct_rules()) r.fn(q, out);
  return out;
}

}  // namespace bnloci::detail
