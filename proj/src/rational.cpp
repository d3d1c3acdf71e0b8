#include "bnloci/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace bnloci {

namespace {

constexpr i128 kI64Min = std::numeric_limits<std::int64_t>::min();
constexpr i128 kI64Max = std::numeric_limits<std::int64_t>::max();

u128 gcd_u128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = 0;
  while (((a | b) & 1) == 0) {
    a >>= 1;
    b >>= 1;
    ++shift;
  }
  while ((a & 1) == 0) a >>= 1;
  do {
    while ((b & 1) == 0) b >>= 1;
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

Int mpz_from_u128(u128 v) {
  Int hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  Int lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  hi <<= 64;
  return hi + lo;
}

Int mpz_from_i128(i128 v) {
  if (v < 0) return -mpz_from_u128(static_cast<u128>(-(v + 1)) + 1);
  return mpz_from_u128(static_cast<u128>(v));
}

bool fits_i64(i128 v) { return v >= kI64Min && v <= kI64Max; }

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_i128(num, den);
}

Rat::Rat(const Int& value) : Rat(value, Int(1)) {}

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_mpq(mpq_class(num, den));
}

Rat Rat::from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const u128 mag = num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num);
  const u128 g = gcd_u128(mag, static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rat r;
  if (fits_i64(num) && fits_i64(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rat Rat::from_mpq(mpq_class q) {
  q.canonicalize();
  Rat r;
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(Int(static_cast<long>(num_)), Int(static_cast<long>(den_)));
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
    num_digits.remove_prefix(1);
  }
  if (!is_digits(num_digits) || (slash != std::string_view::npos && !is_digits(den))) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (!num_str.empty() && num_str.front() == '+') num_str.erase(0, 1);
  Int n(num_str, 10);
  Int d = slash == std::string_view::npos ? Int(1) : Int(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  return Rat(n, d);
}

std::string Rat::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Int Rat::numerator() const { return big_ ? Int(big_->get_num()) : Int(static_cast<long>(num_)); }
Int Rat::denominator() const { return big_ ? Int(big_->get_den()) : Int(static_cast<long>(den_)); }

bool Rat::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rat::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

double Rat::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::int64_t Rat::to_int64() const {
  if (!is_integer()) throw std::domain_error("not an integer: " + str());
  if (big_) throw std::domain_error("integer out of 64-bit range: " + str());
  return num_;
}

Rat Rat::floor() const {
  if (big_) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
    return Rat(q);
  }
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return Rat(q);
}

Rat Rat::ceil() const { return -(-*this).floor(); }

Rat operator+(const Rat& a, const Rat& b) {
  if (a.big_ || b.big_) return Rat::from_mpq(a.to_mpq() + b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    return Rat::from_i128(static_cast<i128>(a.num_) + b.num_, 1);
  }
  return Rat::from_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                        static_cast<i128>(a.den_) * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
  if (a.big_ || b.big_) return Rat::from_mpq(a.to_mpq() * b.to_mpq());
  return Rat::from_i128(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.sign() == 0) throw std::domain_error("division by zero");
  if (a.big_ || b.big_) return Rat::from_mpq(a.to_mpq() / b.to_mpq());
  return Rat::from_i128(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

Rat Rat::operator-() const {
  if (big_) return from_mpq(-*big_);
  return from_i128(-static_cast<i128>(num_), den_);
}

bool operator==(const Rat& a, const Rat& b) {
  if (a.big_ || b.big_) {
    // Canonical forms are unique, so a big value never equals a small one.
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  if (a.big_ || b.big_) {
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  const i128 lhs = static_cast<i128>(a.num_) * b.den_;
  const i128 rhs = static_cast<i128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::string to_fixed(const Rat& r, int places) {
  Int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Int num = r.numerator();
  const Int den = r.denominator();
  const bool negative = num < 0;
  if (negative) num = -num;
  // round(|x| * 10^p) with halves going up
  Int scaled = (2 * num * scale + den) / (2 * den);
  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && scaled != 0) digits.insert(0, "-");
  return digits;
}

}  // namespace bnloci
