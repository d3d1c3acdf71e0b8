#include "bnloci/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rules.hpp"

namespace bnloci {

using detail::Finding;
using detail::Outcome;

std::string to_string(CurveClass c) {
  switch (c) {
    case CurveClass::Arbitrary: return "arbitrary";
    case CurveClass::GenericCurve: return "generic";
    case CurveClass::Hyperelliptic: return "hyperelliptic";
    case CurveClass::NonHyperelliptic: return "nonhyperelliptic";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::WholeSpace: return "WholeSpace";
    case Verdict::NonEmpty: return "NonEmpty";
    case Verdict::Empty: return "Empty";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Stability s) { return s == Stability::Stable ? "stable" : "semistable"; }

std::string to_string(H0Max::Attained a) {
  switch (a) {
    case H0Max::Attained::Yes: return "Yes";
    case H0Max::Attained::No: return "No";
    case H0Max::Attained::Unknown: return "Unknown";
  }
  return "?";
}

CurveClass parse_curve_class(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "arbitrary") return CurveClass::Arbitrary;
  if (t == "generic") return CurveClass::GenericCurve;
  if (t == "hyperelliptic") return CurveClass::Hyperelliptic;
  if (t == "nonhyperelliptic") return CurveClass::NonHyperelliptic;
  throw std::invalid_argument("unknown curve class: " + text);
}

std::string Classification::primary_rule() const {
  for (const Evidence& e : evidence) {
    if (!e.rule.empty()) return e.rule;
  }
  return "";
}

namespace {

bool positive(Outcome o) { return o != Outcome::Empty; }

struct Collected {
  std::vector<Finding> direct;
  std::vector<Finding> dual;
};

Collected collect(Genus g, const Triple& t, CurveClass c, Stability m) {
  return {detail::run_direct(g, t, c, m), detail::run_direct(g, serre_dual(g, t), c, m)};
}

bool any_of(const Collected& col, bool want_positive) {
  const auto hit = [&](const Finding& f) { return positive(f.outcome) == want_positive; };
  return std::any_of(col.direct.begin(), col.direct.end(), hit) ||
         std::any_of(col.dual.begin(), col.dual.end(), hit);
}

Evidence serre_evidence(const Finding& f, const Triple& dual) {
  Evidence e{"rule_serre",
             {{"dual_n", Rat(dual.n)}, {"dual_d", Rat(dual.d)}, {"dual_k", Rat(dual.k)}},
             "Serre duality E -> K x E* via " + f.evidence.rule};
  return e;
}

std::string describe(const Finding& f) {
  std::ostringstream os;
  os << f.evidence.rule;
  for (const auto& [k, v] : f.evidence.params) os << " " << k << "=" << v;
  return os.str();
}

}  // namespace

Classification classify(Genus g, const Triple& t, CurveClass c, Stability m) {
  if (c == CurveClass::NonHyperelliptic && g.value() < 3) {
    throw std::invalid_argument("every curve of genus 2 is hyperelliptic");
  }
  Classification out;
  out.genus = g.value();
  out.triple = t;
  out.mu = Rat(t.d, t.n);
  out.lambda = Rat(t.k, t.n);
  out.curve = c;
  out.stability = m;
  out.rho = rho(g, t);

  std::vector<Finding> pos, neg;
  bool whole = false;
  const auto take = [&](const Finding& f) {
    if (f.outcome == Outcome::WholeSpace) whole = true;
    (positive(f.outcome) ? pos : neg).push_back(f);
  };

  if (t.k <= 0 || t.d < 0) {
    for (const Finding& f : detail::run_direct(g, t, c, m)) take(f);
  } else {
    const Triple dual = serre_dual(g, t);
    const Collected col = collect(g, t, c, m);
    for (const Finding& f : col.direct) take(f);
    for (const Finding& f : col.dual) {
      Finding s{f.outcome == Outcome::WholeSpace ? Outcome::NonEmpty : f.outcome, serre_evidence(f, dual)};
      take(s);
    }
    // W^{k'-1} is contained in W^{k-1} for k' >= k.
    const std::int64_t kmax = t.n + t.d;
    if (pos.empty()) {
      for (std::int64_t k2 = t.k + 1; k2 <= kmax; ++k2) {
        const Collected up = collect(g, Triple(t.n, t.d, k2), c, m);
        if (any_of(up, true)) {
          pos.push_back({Outcome::NonEmpty,
                         Evidence{"rule_monotone_sections", {{"k'", Rat(k2)}},
                                  "a bundle with k' >= k sections has k sections"}});
          break;
        }
      }
    }
    if (neg.empty()) {
      for (std::int64_t k2 = t.k - 1; k2 >= 1; --k2) {
        const Collected down = collect(g, Triple(t.n, t.d, k2), c, m);
        if (any_of(down, false)) {
          neg.push_back({Outcome::Empty,
                         Evidence{"rule_monotone_sections", {{"k'", Rat(k2)}},
                                  "no bundle with k' <= k sections means none with k"}});
          break;
        }
      }
    }
  }

  if (!pos.empty() && !neg.empty()) {
    std::ostringstream os;
    os << "contradiction at g=" << g.value() << " (" << t.n << "," << t.d << "," << t.k << ") "
       << to_string(c) << " " << to_string(m) << ": " << describe(neg.front()) << " vs "
       << describe(pos.front());
    throw InternalContradiction(os.str());
  }
  if (!pos.empty()) {
    out.verdict = whole ? Verdict::WholeSpace : Verdict::NonEmpty;
    // WholeSpace evidence first so the primary rule explains the verdict.
    std::stable_partition(pos.begin(), pos.end(), [](const Finding& f) { return f.outcome == Outcome::WholeSpace; });
    for (const Finding& f : pos) out.evidence.push_back(f.evidence);
  } else if (!neg.empty()) {
    out.verdict = Verdict::Empty;
    for (const Finding& f : neg) out.evidence.push_back(f.evidence);
  } else {
    out.verdict = Verdict::Unknown;
    for (const auto& r : detail::direct_rules()) out.attempted.push_back(r.id);
    out.attempted.push_back("rule_serre");
    out.attempted.push_back("rule_monotone_sections");
  }

  out.annotations = annotate_geometry(g, t);
  if (c == CurveClass::Hyperelliptic && m == Stability::Stable && t.n == 1 && t.d % 2 == 0 &&
      t.k == t.d / 2 + 1 && t.d >= 2 && t.d <= 2 * g.value() - 2) {
    out.annotations.push_back("realized only by L^" + std::to_string(t.d / 2) +
                              ", the power of the hyperelliptic line bundle");
  }
  return out;
}

std::vector<std::string> annotate_geometry(Genus g, const Triple& t) {
  std::vector<std::string> notes;
  const auto [n, d, k] = std::tuple(t.n, t.d, t.k);
  if (k < 1 || d <= 0) return notes;
  const std::string r = rho(g, t).get_str();
  const std::string w = "W^" + std::to_string(k) + "_{" + std::to_string(n) + "," + std::to_string(d) + "}";
  if (d <= n) {
    notes.push_back("if nonempty: irreducible of dimension " + r + ", singular locus " + w + " (BGN)");
  } else if (d < 2 * n) {
    notes.push_back("if nonempty: every component has dimension " + r + ", singular locus " + w);
    if (n == d + (n - k) * g.value() || d < n + g.value()) {
      notes.push_back("irreducible");
    }
  }
  if (k == 1) {
    const Int r0 = rho(g, Triple(n, d, 1));
    notes.push_back("W^0 irreducible of dimension rho^0=" + r0.get_str() + ", singular locus W^1 (Sundaram, Laumon)");
  }
  return notes;
}

H0Max h0_max(Genus g, std::int64_t n, std::int64_t d, CurveClass c) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  H0Max out;
  if (d < 0) {
    out.bound = 0;
    out.attained = H0Max::Attained::Yes;
    out.note = "negative degree";
    return out;
  }
  const std::int64_t start = std::max(d - n * (g.value() - 1), n + d / 2) + 1;
  std::int64_t k = start;
  Classification above;
  bool have_above = false;
  for (; k >= 1; --k) {
    Classification cl = classify(g, Triple(n, d, k), c, Stability::Stable);
    if (cl.verdict != Verdict::Empty) {
      out.attained = cl.nonempty() ? H0Max::Attained::Yes : H0Max::Attained::Unknown;
      if (!cl.annotations.empty() && cl.annotations.back().rfind("realized only", 0) == 0) {
        out.note = "attained only by the hyperelliptic bundle power L^" + std::to_string(d / 2);
      }
      break;
    }
    above = std::move(cl);
    have_above = true;
  }
  out.bound = std::max<std::int64_t>(k, 0);
  if (k == 0) out.attained = H0Max::Attained::Yes;
  if (have_above && out.note.empty() && above.primary_rule() == "rule_hyper_sharp_gap") {
    out.note = "k=" + std::to_string(out.bound + 1) + " excluded by the hyperelliptic sharp gap";
  }
  return out;
}

Classification shift_nonempty(Genus g, const Triple& t, std::int64_t dprime, CurveClass c, Stability m) {
  if (dprime < 0) throw std::invalid_argument("shift must be non-negative");
  const Triple shifted(t.n, t.d + t.n * dprime, t.k);
  Classification out = classify(g, shifted, c, m);
  if (dprime == 0 || out.nonempty()) return out;
  const Classification base = classify(g, t, c, m);
  if (base.nonempty()) {
    if (out.verdict == Verdict::Empty) {
      throw InternalContradiction("tensor shift of a nonempty locus classified Empty");
    }
    out.verdict = Verdict::NonEmpty;
    out.attempted.clear();
    out.evidence.push_back({"rule_tensor_shift",
                            {{"d'", Rat(dprime)}},
                            "tensoring by a line bundle of degree d' >= 0 with a section"});
  }
  return out;
}

}  // namespace bnloci
