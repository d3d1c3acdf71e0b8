#include "bnloci/arith.hpp"

#include <cmath>
#include <string>

namespace bnloci {

void Genus::require_at_least(std::int64_t lo, const char* what) const {
  if (g_ < lo) {
    throw std::invalid_argument(std::string(what) + " requires genus >= " + std::to_string(lo));
  }
}

Int rho(Genus g, const Triple& t) {
  const Int n(static_cast<long>(t.n)), d(static_cast<long>(t.d)), k(static_cast<long>(t.k));
  const Int gm1(static_cast<long>(g.value() - 1));
  return n * n * gm1 + 1 - k * (k - d + n * gm1);
}

Rat rho_tilde(Genus g, const BNPoint& p) {
  const Rat gm1(g.value() - 1);
  return gm1 - p.lambda * (p.lambda - p.mu + gm1);
}

BNPoint serre_dual(Genus g, const BNPoint& p) {
  const Rat gm1(g.value() - 1);
  return {2 * gm1 - p.mu, p.lambda + gm1 - p.mu};
}

Triple serre_dual(Genus g, const Triple& t) {
  const std::int64_t gm1 = g.value() - 1;
  return Triple(t.n, 2 * t.n * gm1 - t.d, t.k + t.n * gm1 - t.d);
}

static void check_s(std::int64_t s) {
  if (s < 1) throw std::invalid_argument("s must be at least 1");
}

Rat eta(Genus g, std::int64_t s) {
  check_s(s);
  return Rat((s - 1) * (s + g.value()), s);
}

std::int64_t eta_hat(Genus g, std::int64_t s) { return eta(g, s).ceil().to_int64(); }

std::int64_t eta_hat_prime(Genus g, std::int64_t s) {
  return (eta(g, s) + Rat(1, s)).ceil().to_int64() - 1;
}

double BNCurveAt::approx() const {
  const double x = mu.to_double() - static_cast<double>(g.value() - 1);
  return (std::sqrt(x * x + 4.0 * static_cast<double>(g.value() - 1)) + x) / 2.0;
}

std::strong_ordering BNCurveAt::compare(const Rat& lambda) const {
  // rho_g(mu) > 0 always; for lambda > 0 the parabola rho~ changes sign at rho_g.
  if (lambda.sign() <= 0) return std::strong_ordering::less;
  const int r = rho_tilde(g, {mu, lambda}).sign();
  if (r > 0) return std::strong_ordering::less;
  if (r < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BNCurveAt bn_curve(Genus g, const Rat& mu) { return BNCurveAt{g, mu}; }

Rat hyper_bound_F(Genus g, std::int64_t s, std::int64_t n, std::int64_t d) {
  if (s < 0) throw std::invalid_argument("s must be non-negative");
  if (n < 1) throw std::invalid_argument("rank must be positive");
  return Rat(s * n) + Rat(s, g.value()) * Rat(d - (2 * s - 1) * n);
}

int sign_sqrt_minus(const Rat& a, const Rat& c) {
  if (a.sign() < 0) throw std::domain_error("square root of a negative number");
  if (c.sign() < 0) return 1;
  return (a - c * c).sign();
}

int sign_sqrt_diff(const Rat& a, const Rat& b, const Rat& c) {
  if (a.sign() < 0 || b.sign() < 0) throw std::domain_error("square root of a negative number");
  // sqrt(a) vs sqrt(b) + c. If the right side is negative it may be compared
  // as sqrt(b) + c < 0 <= sqrt(a); otherwise square both sides.
  const int rhs_sign = sign_sqrt_minus(b, -c);  // sign of sqrt(b) + c
  if (rhs_sign < 0) return 1;
  if (rhs_sign == 0) return a.sign();
  // sqrt(a) - (sqrt(b) + c) has the sign of a - (b + c^2 + 2c sqrt(b)).
  const Rat e = a - b - c * c;  // compare e with 2c sqrt(b)
  const Rat twoc = 2 * c;
  if (twoc.sign() == 0 || b.sign() == 0) return e.sign();
  if (twoc.sign() > 0) {
    if (e.sign() <= 0) return -1;
    return (e * e - twoc * twoc * b).sign();
  }
  if (e.sign() >= 0) return 1;
  return (twoc * twoc * b - e * e).sign();
}

}  // namespace bnloci
