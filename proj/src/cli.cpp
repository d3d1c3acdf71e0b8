#include "bnloci/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>

#include "bnloci/oracle.hpp"
#include "bnloci/regions.hpp"
#include "bnloci/serialize.hpp"
#include "bnloci/svg.hpp"
#include "bnloci/sweep.hpp"

namespace bnloci {

namespace {

struct IOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RegionMode parse_mode(const std::string& s) {
  if (s == "stable") return RegionMode::Stable;
  if (s == "nonhyperelliptic") return RegionMode::NonHyperelliptic;
  if (s == "semistable") return RegionMode::Semistable;
  throw std::invalid_argument("unknown mode: " + s);
}

// Writes to the file when a path is given, else to out.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IOError("cannot open " + path + " for writing");
  f << text;
  if (!f.flush()) throw IOError("write to " + path + " failed");
}

std::string fixed_approx(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string plain(const Classification& c) {
  std::string s = "genus " + std::to_string(c.genus) + ", rank " + std::to_string(c.triple.n) + ", degree " +
                  std::to_string(c.triple.d) + ", sections " + std::to_string(c.triple.k) + " (mu=" + c.mu.str() +
                  ", lambda=" + c.lambda.str() + "), " + to_string(c.curve) + " curve, " + to_string(c.stability) +
                  "\n";
  s += "verdict: " + to_string(c.verdict) + "\n";
  s += "rho: " + c.rho.get_str() + "\n";
  if (!c.evidence.empty()) s += "evidence:\n";
  for (const Evidence& e : c.evidence) {
    s += "  " + e.rule;
    for (std::size_t i = 0; i < e.params.size(); ++i) {
      s += (i ? ", " : " [") + e.params[i].first + "=" + e.params[i].second.str();
    }
    if (!e.params.empty()) s += "]";
    s += ": " + e.citation + "\n";
  }
  if (c.verdict == Verdict::Unknown) {
    s += "attempted:";
    for (const std::string& r : c.attempted) s += " " + r;
    s += "\n";
  }
  if (!c.annotations.empty()) s += "annotations:\n";
  for (const std::string& a : c.annotations) s += "  " + a + "\n";
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brill-Noether loci of vector bundles on curves"};
  app.require_subcommand(1);

  std::int64_t genus = 0, rank = 0, degree = 0, sections = 0;
  std::string curve = "arbitrary", mode = "stable", out_path;
  bool semistable = false, json = false;

  auto* classify_cmd = app.add_subcommand("classify", "Decide nonemptiness of one locus");
  classify_cmd->add_option("--genus", genus)->required();
  classify_cmd->add_option("--rank", rank)->required();
  classify_cmd->add_option("--degree", degree)->required();
  classify_cmd->add_option("--sections", sections)->required();
  classify_cmd->add_option("--curve", curve, "arbitrary, generic, hyperelliptic or nonhyperelliptic");
  classify_cmd->add_flag("--semistable", semistable);
  classify_cmd->add_flag("--json", json);

  std::string fn_name, mu_text, lambda_text;
  auto* boundary_cmd = app.add_subcommand("boundary", "Evaluate f, t, h or the BN curve at a slope");
  boundary_cmd->add_option("--genus", genus)->required();
  boundary_cmd->add_option("--fn", fn_name, "f, t, h or rho")->required();
  boundary_cmd->add_option("--mu", mu_text)->required();
  boundary_cmd->add_option("--lambda", lambda_text, "with --fn rho, compare this lambda with the curve");

  std::string region_text;
  auto* region_cmd = app.add_subcommand("region", "Membership of a point, or the boundary polyline");
  region_cmd->add_option("--genus", genus)->required();
  region_cmd->add_option("--region", region_text)->required();
  region_cmd->add_option("--mu", mu_text);
  region_cmd->add_option("--lambda", lambda_text);
  region_cmd->add_option("--mode", mode, "stable, nonhyperelliptic or semistable");
  region_cmd->add_option("--out", out_path);

  std::vector<std::string> region_list;
  PlotSpec spec;
  bool no_curve = false;
  auto* plot_cmd = app.add_subcommand("plot", "Write an SVG figure");
  plot_cmd->add_option("--genus", genus)->required();
  plot_cmd->add_option("--regions", region_list)->delimiter(',');
  plot_cmd->add_flag("--no-bn-curve", no_curve);
  plot_cmd->add_option("--width", spec.width_px);
  plot_cmd->add_option("--height", spec.height_px);
  plot_cmd->add_option("--mode", mode);
  plot_cmd->add_option("--out", out_path)->required();

  std::int64_t max_rank = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "Classify every triple up to a rank as CSV");
  enum_cmd->add_option("--genus", genus)->required();
  enum_cmd->add_option("--max-rank", max_rank)->required();
  enum_cmd->add_option("--curve", curve);
  enum_cmd->add_flag("--semistable", semistable);
  enum_cmd->add_option("--out", out_path);

  std::string suite;
  SuiteParams params;
  std::int64_t count = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "suite name or all")->required();
  verify_cmd->add_option("--genus-min", params.g_lo);
  verify_cmd->add_option("--genus-max", params.g_hi);
  verify_cmd->add_option("--max-den", params.max_den);
  verify_cmd->add_option("--max-rank", params.n_max);
  verify_cmd->add_option("--count", count);
  verify_cmd->add_option("--out", out_path);

  std::int64_t max_den = 4;
  auto* compare_cmd = app.add_subcommand("compare", "Grid points in exactly one of BMNO and T");
  compare_cmd->add_option("--genus", genus)->required();
  compare_cmd->add_option("--max-den", max_den);
  compare_cmd->add_option("--out", out_path);

  auto* h0_cmd = app.add_subcommand("h0max", "Largest number of sections the rules allow");
  h0_cmd->add_option("--genus", genus)->required();
  h0_cmd->add_option("--rank", rank)->required();
  h0_cmd->add_option("--degree", degree)->required();
  h0_cmd->add_option("--curve", curve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Stability stab = semistable ? Stability::Semistable : Stability::Stable;
    if (*classify_cmd) {
      const Classification c = classify(Genus(genus), Triple(rank, degree, sections), parse_curve_class(curve), stab);
      out << (json ? dump(to_json(c)) : plain(c));
    } else if (*boundary_cmd) {
      const Genus g(genus);
      const Rat mu = Rat::parse(mu_text);
      if (fn_name == "rho") {
        const BNCurveAt at = bn_curve(g, mu);
        if (lambda_text.empty()) {
          out << fixed_approx(at.approx()) << "\n";
        } else {
          const auto c = at.compare(Rat::parse(lambda_text));
          out << (c < 0 ? "below" : c > 0 ? "above" : "on") << "\n";
        }
      } else {
        RegionKind k;
        if (fn_name == "f") k = RegionKind::BMNO;
        else if (fn_name == "t") k = RegionKind::TeixidorT;
        else if (fn_name == "h") k = RegionKind::BMNOh;
        else throw std::invalid_argument("unknown function: " + fn_name);
        out << region_top(g, {k, 0, 1})(mu).str() << "\n";
      }
    } else if (*region_cmd) {
      const Genus g(genus);
      const RegionId id = RegionId::parse(region_text);
      if (mu_text.empty() != lambda_text.empty()) throw std::invalid_argument("give both --mu and --lambda");
      if (!mu_text.empty()) {
        const BNPoint p{Rat::parse(mu_text), Rat::parse(lambda_text)};
        out << (in_region(g, id, p, parse_mode(mode)) ? "In" : "Out") << "\n";
      } else {
        emit(out_path, dump(to_json(boundary_polyline(g, id, parse_mode(mode)))), out);
      }
    } else if (*plot_cmd) {
      spec.genus = genus;
      spec.show_bn_curve = !no_curve;
      spec.mode = parse_mode(mode);
      for (const std::string& r : region_list) spec.regions.push_back(RegionId::parse(r));
      const std::string svg = render_svg(spec);
      emit(out_path, svg, out);
    } else if (*enum_cmd) {
      const auto rows = enumerate(Genus(genus), max_rank, parse_curve_class(curve), stab);
      emit(out_path, to_csv(rows), out);
    } else if (*verify_cmd) {
      params.count = count > 0 ? static_cast<std::uint64_t>(count) : 0;
      std::vector<SweepReport> reports;
      if (suite == "all") {
        for (const std::string& s : suite_names()) reports.push_back(run_suite(s, params));
      } else {
        reports.push_back(run_suite(suite, params));
      }
      Json j = Json::array();
      bool ok = true;
      for (const SweepReport& r : reports) {
        j.push_back(to_json(r));
        ok = ok && r.passed();
        err << r.suite << ": " << r.checks_run << " checks, " << r.failure_count << " failures\n";
      }
      emit(out_path, dump(reports.size() == 1 ? j[0] : j), out);
      return ok ? kExitOk : kExitInternal;
    } else if (*compare_cmd) {
      const Genus g(genus);
      emit(out_path, dump(to_json(compare_regions(g, max_den), genus, max_den)), out);
    } else if (*h0_cmd) {
      out << dump(to_json(h0_max(Genus(genus), rank, degree, parse_curve_class(curve))));
    }
  } catch (const InternalContradiction& e) {
    err << "internal contradiction: " << e.what() << "\n";
    return kExitInternal;
  } catch (const IOError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIO;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace bnloci
