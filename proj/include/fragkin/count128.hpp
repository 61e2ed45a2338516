#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>

#include "fragkin/errors.hpp"

namespace fragkin {

/// Exact non-negative counter backed by a 128-bit integer with checked
/// arithmetic.  Configuration counts are the oracle for everything else, so
/// they must never wrap or degrade to floating point: any operation that
/// would overflow throws OverflowError instead.
class Count128 {
 public:
  constexpr Count128() = default;
  constexpr Count128(std::uint64_t value) : v_(value) {}  // NOLINT: implicit by design

  static constexpr Count128 from_raw(unsigned __int128 raw) {
    Count128 c;
    c.v_ = raw;
    return c;
  }
  constexpr unsigned __int128 raw() const { return v_; }

  friend Count128 operator+(Count128 x, Count128 y) {
    unsigned __int128 r = 0;
    if (__builtin_add_overflow(x.v_, y.v_, &r))
      throw OverflowError("count addition overflows 128 bits");
    return from_raw(r);
  }
  friend Count128 operator-(Count128 x, Count128 y) {
    if (y.v_ > x.v_) throw OverflowError("count subtraction underflows");
    return from_raw(x.v_ - y.v_);
  }
  friend Count128 operator*(Count128 x, Count128 y) {
    unsigned __int128 r = 0;
    if (__builtin_mul_overflow(x.v_, y.v_, &r))
      throw OverflowError("count multiplication overflows 128 bits");
    return from_raw(r);
  }
  /// Integer division; callers use it only where the division is exact
  /// (multiplicative binomial recurrences).
  friend Count128 operator/(Count128 x, Count128 y) {
    if (y.v_ == 0) throw NumericError("count division by zero");
    return from_raw(x.v_ / y.v_);
  }

  Count128& operator+=(Count128 y) { return *this = *this + y; }
  Count128& operator-=(Count128 y) { return *this = *this - y; }
  Count128& operator*=(Count128 y) { return *this = *this * y; }

  friend constexpr bool operator==(Count128 x, Count128 y) { return x.v_ == y.v_; }
  friend constexpr bool operator!=(Count128 x, Count128 y) { return x.v_ != y.v_; }
  friend constexpr bool operator<(Count128 x, Count128 y) { return x.v_ < y.v_; }
  friend constexpr bool operator<=(Count128 x, Count128 y) { return x.v_ <= y.v_; }
  friend constexpr bool operator>(Count128 x, Count128 y) { return x.v_ > y.v_; }
  friend constexpr bool operator>=(Count128 x, Count128 y) { return x.v_ >= y.v_; }

  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool fits_u64() const { return v_ <= static_cast<std::uint64_t>(-1); }
  constexpr std::uint64_t as_u64() const {
    if (!fits_u64()) throw OverflowError("count does not fit in 64 bits");
    return static_cast<std::uint64_t>(v_);
  }
  double as_double() const { return static_cast<double>(v_); }

  std::string str() const {
    if (v_ == 0) return "0";
    std::string s;
    unsigned __int128 x = v_;
    while (x > 0) {
      s += static_cast<char>('0' + static_cast<unsigned>(x % 10));
      x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
  }

 private:
  unsigned __int128 v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Count128 c) { return os << c.str(); }

}  // namespace fragkin
