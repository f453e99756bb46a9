#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "ellweyl/errors.hpp"

namespace ellweyl {

// Exact rational arithmetic over long long, always kept normalized with a
// positive denominator. Every decision in this library reduces to sign
// tests on these values, so no floating point appears anywhere.
//
// Comparisons go through 128-bit cross products and cannot overflow;
// arithmetic is checked and throws InternalError instead of wrapping.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(long long n) : num_(n) {}  // implicit: integer literals compare directly
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }

  Rat operator-() const {
    Rat out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }
  Rat& operator+=(const Rat& o) { return assign(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_); }
  Rat& operator-=(const Rat& o) { return assign(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_); }
  Rat& operator*=(const Rat& o) { return assign(i128(num_) * o.num_, i128(den_) * o.den_); }
  Rat& operator/=(const Rat& o) { return assign(i128(num_) * o.den_, i128(den_) * o.num_); }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

 private:
  using i128 = __int128;

  void normalize() {
    if (den_ == 0) throw InternalError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  Rat& assign(i128 n, i128 d) {
    if (d == 0) throw InternalError("rational division by zero");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lo = std::numeric_limits<long long>::min();
    constexpr i128 hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi || d > hi) throw InternalError("rational overflow");
    num_ = static_cast<long long>(n);
    den_ = static_cast<long long>(d);
    return *this;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      const i128 r = a % b;
      a = b;
      b = r;
    }
    return a;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline bool is_integer(const Rat& q) { return q.denominator() == 1; }

// Parses "p", "-p", "p/q" with optional sign. Throws ConstructionError with
// `where` prefixed on malformed input or zero denominator.
Rat parse_rational(std::string_view text, const std::string& where = "rational");

// Canonical form: integers as "n", everything else as "p/q" (q > 0).
std::string format_rational(const Rat& q);

std::string format_rational_vector(const std::vector<Rat>& v);

}  // namespace ellweyl
