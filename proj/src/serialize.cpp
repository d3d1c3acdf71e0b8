#include "bnloci/serialize.hpp"

namespace bnloci {

namespace {

Json int_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const BNPoint& p) { return Json::array({p.mu.str(), p.lambda.str()}); }

Json to_json(const Classification& c) {
  Json j;
  j["genus"] = c.genus;
  j["rank"] = c.triple.n;
  j["degree"] = c.triple.d;
  j["sections"] = c.triple.k;
  j["mu"] = c.mu.str();
  j["lambda"] = c.lambda.str();
  j["curve_class"] = to_string(c.curve);
  j["stability"] = to_string(c.stability);
  j["verdict"] = to_string(c.verdict);
  j["rho"] = int_json(c.rho);
  Json ev = Json::array();
  for (const Evidence& e : c.evidence) {
    Json params = Json::object();
    for (const auto& [k, v] : e.params) params[k] = v.str();
    ev.push_back({{"rule", e.rule}, {"params", params}, {"citation", e.citation}});
  }
  j["evidence"] = ev;
  j["annotations"] = c.annotations;
  if (c.verdict == Verdict::Unknown) j["attempted"] = c.attempted;
  return j;
}

Json to_json(const Polyline& p) {
  Json segs = Json::array();
  for (const Segment& s : p.segments) {
    segs.push_back({{"from", to_json(s.from)},
                    {"to", to_json(s.to)},
                    {"include_from", s.include_from},
                    {"include_to", s.include_to},
                    {"include_interior", s.include_interior}});
  }
  return {{"region", p.region.name()}, {"genus", p.genus}, {"segments", segs}};
}

Json to_json(const SweepReport& r) {
  Json fails = Json::array();
  for (const Failure& f : r.failures) {
    fails.push_back({{"genus", f.genus}, {"input", f.input}, {"expected", f.expected}, {"observed", f.observed}});
  }
  return {{"suite", r.suite},       {"genus_range", {r.g_lo, r.g_hi}},   {"max_den", r.max_den},
          {"checks_run", r.checks_run}, {"failure_count", r.failure_count}, {"passed", r.passed()},
          {"failures", fails}};
}

Json to_json(const H0Max& h) {
  return {{"bound", h.bound}, {"attained", to_string(h.attained)}, {"note", h.note}};
}

Json to_json(const RegionDiff& d, std::int64_t genus, std::int64_t max_den) {
  Json a = Json::array(), b = Json::array();
  for (const BNPoint& p : d.in_BMNO_not_T) a.push_back(to_json(p));
  for (const BNPoint& p : d.in_T_not_BMNO) b.push_back(to_json(p));
  return {{"genus", genus}, {"max_den", max_den}, {"in_BMNO_not_T", a}, {"in_T_not_BMNO", b}};
}

std::string to_csv(const std::vector<Classification>& rows) {
  std::string out = "genus,rank,degree,sections,mu,lambda,verdict,rule,rho\r\n";
  for (const Classification& c : rows) {
    out += std::to_string(c.genus) + ',' + std::to_string(c.triple.n) + ',' + std::to_string(c.triple.d) + ',' +
           std::to_string(c.triple.k) + ',' + csv_field(c.mu.str()) + ',' + csv_field(c.lambda.str()) + ',' +
           to_string(c.verdict) + ',' + csv_field(c.primary_rule()) + ',' + c.rho.get_str() + "\r\n";
  }
  return out;
}

}  // namespace bnloci
