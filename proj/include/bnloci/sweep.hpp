#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnloci/oracle.hpp"
#include "bnloci/regions.hpp"

namespace bnloci {

struct Failure {
  std::int64_t genus = 0;
  std::string input;
  std::string expected;
  std::string observed;
};

/// Outcome of one verification suite. Failures are sorted by input and
/// capped; failure_count keeps the true total.
struct SweepReport {
  static constexpr std::size_t kMaxFailures = 100;

  std::string suite;
  std::int64_t g_lo = 0;
  std::int64_t g_hi = 0;
  std::int64_t max_den = 0;
  std::uint64_t checks_run = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;

  bool passed() const { return failure_count == 0; }
};

/// 0 <= rho_g - f_g < 1 on the grid and at every breakpoint of f_g.
SweepReport verify_f_gap(std::int64_t g_lo, std::int64_t g_hi, std::int64_t max_den);

/// The sharper bound rho_g - f_g < max_s [rho_g(eta^(s+1) - 1) - s].
SweepReport verify_f_refined(std::int64_t g_lo, std::int64_t g_hi, std::int64_t max_den);

/// 0 <= rho_g - t_g < 1, plus continuity and monotonicity of t_g.
SweepReport verify_t_gap(std::int64_t g_lo, std::int64_t g_hi, std::int64_t max_den);

/// The translate chain and the three replacement lemmas used to build BMNO.
SweepReport verify_inclusions(std::int64_t g_lo, std::int64_t g_hi, std::int64_t max_den);

/// Serre duality invariance of BMNO, T, BMNO_h, rho~ and the graph of f_g.
SweepReport verify_sigma(std::int64_t g_lo, std::int64_t g_hi, std::int64_t max_den);

/// Exhaustive oracle checks: no contradiction, monotone in k, Serre
/// consistency, tensor monotonicity, Clifford soundness and the
/// hyperelliptic bound.
SweepReport verify_oracle(std::int64_t g_max, std::int64_t n_max);

/// The genus 3 verdict table for n <= n_max.
SweepReport verify_genus3(std::int64_t n_max);

/// Hyperelliptic bounds, BMNO_h under h_g, and the genus 4 instances.
SweepReport verify_hyperelliptic(std::int64_t g_lo, std::int64_t g_hi, std::int64_t n_max);

/// 2F_s = F_{s-1} + F_{s+1} (shifted) on `count` seeded instances.
SweepReport verify_recurrence(std::uint64_t count, std::uint64_t seed = 0x5eed2024);

/// BMNO against T: witnesses on both sides and the f_g/t_g ordering near
/// each eta^(s).
SweepReport verify_compare(std::int64_t g_lo, std::int64_t g_hi, std::int64_t max_den);

/// Classification rows ordered by n, then d, then k, over
/// 1 <= n <= n_max, 0 <= d <= 2n(g-1), 1 <= k <= n+d.
std::vector<Classification> enumerate(Genus g, std::int64_t n_max, CurveClass c, Stability m);

struct RegionDiff {
  std::vector<BNPoint> in_BMNO_not_T;
  std::vector<BNPoint> in_T_not_BMNO;
};

/// Grid points of P in one region and not the other, semistable membership,
/// sorted by (mu, lambda).
RegionDiff compare_regions(Genus g, std::int64_t max_den);

/// Every suite name accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Suite parameters; zero means the suite's default.
struct SuiteParams {
  std::int64_t g_lo = 0;
  std::int64_t g_hi = 0;
  std::int64_t max_den = 0;
  std::int64_t n_max = 0;
  std::uint64_t count = 0;
};

/// Throws std::invalid_argument for an unknown name.
SweepReport run_suite(const std::string& name, SuiteParams params = {});

}  // namespace bnloci
