#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

#include "bnloci/rational.hpp"

namespace bnloci {

/// Genus of the underlying curve; always at least 2.
class Genus {
 public:
  explicit Genus(std::int64_t g) : g_(g) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
  }
  std::int64_t value() const { return g_; }
  operator std::int64_t() const { return g_; }  // NOLINT
  /// Throws unless g >= 3; the region machinery needs it.
  void require_at_least(std::int64_t lo, const char* what) const;

 private:
  std::int64_t g_;
};

struct BNPoint {
  Rat mu;
  Rat lambda;
  friend bool operator==(const BNPoint&, const BNPoint&) = default;
};

struct Triple {
  std::int64_t n = 1;
  std::int64_t d = 0;
  std::int64_t k = 0;

  Triple() = default;
  Triple(std::int64_t n_, std::int64_t d_, std::int64_t k_) : n(n_), d(d_), k(k_) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
  }
  BNPoint point() const { return {Rat(d, n), Rat(k, n)}; }
  friend bool operator==(const Triple&, const Triple&) = default;
};

Int rho(Genus g, const Triple& t);
Rat rho_tilde(Genus g, const BNPoint& p);

BNPoint serre_dual(Genus g, const BNPoint& p);
Triple serre_dual(Genus g, const Triple& t);

Rat eta(Genus g, std::int64_t s);
std::int64_t eta_hat(Genus g, std::int64_t s);
std::int64_t eta_hat_prime(Genus g, std::int64_t s);

/// The BN curve lambda = rho_g(mu) at a fixed slope.
struct BNCurveAt {
  Genus g;
  Rat mu;
  /// Floating value, for drawing only.
  double approx() const;
  /// Exact ordering of lambda against rho_g(mu).
  std::strong_ordering compare(const Rat& lambda) const;
};

BNCurveAt bn_curve(Genus g, const Rat& mu);

/// Upper bound for h0 on hyperelliptic curves in the slope band (2s-2, 2s).
Rat hyper_bound_F(Genus g, std::int64_t s, std::int64_t n, std::int64_t d);

/// Sign of sqrt(a) - sqrt(b) - c for a, b >= 0, computed exactly.
int sign_sqrt_diff(const Rat& a, const Rat& b, const Rat& c);

/// Sign of sqrt(a) - c for a >= 0.
int sign_sqrt_minus(const Rat& a, const Rat& c);

}  // namespace bnloci
