#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bnloci {

using Int = mpz_class;
__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
///
/// Values whose numerator and denominator fit in 64 bits are kept inline and
/// combined with 128-bit intermediates; anything larger is promoted to a GMP
/// rational. The promotion is invisible to callers: equality, ordering and
/// printing do not depend on the representation.
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t value) : num_(value) {}  // NOLINT: integers are rationals
  Rat(int value) : num_(value) {}           // NOLINT
  Rat(std::int64_t num, std::int64_t den);
  explicit Rat(const Int& value);
  Rat(const Int& num, const Int& den);

  /// Parses "a/b" or "a". Throws std::invalid_argument on malformed input or
  /// a zero denominator.
  static Rat parse(std::string_view text);

  /// Canonical form: "a" when the denominator is 1, otherwise "a/b".
  std::string str() const;

  Int numerator() const;
  Int denominator() const;

  bool is_integer() const;
  int sign() const;
  double to_double() const;

  /// Integral value as a machine integer; throws std::domain_error if the
  /// value is not an integer or does not fit.
  std::int64_t to_int64() const;

  Rat floor() const;
  Rat ceil() const;
  /// Fractional part x - floor(x), in [0, 1).
  Rat frac() const { return *this - floor(); }
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const;

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b);
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  bool is_small() const { return big_ == nullptr; }

 private:
  static Rat from_i128(i128 num, i128 den);
  static Rat from_mpq(mpq_class q);
  mpq_class to_mpq() const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Rounds to `places` decimal digits, halves away from zero, without going
/// through floating point. Used for deterministic coordinate output.
std::string to_fixed(const Rat& r, int places);

}  // namespace bnloci
