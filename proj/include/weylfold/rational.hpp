#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace weylfold {

using i64 = std::int64_t;
using i128 = __int128;

// Exact rational on int64 numerator/denominator, always normalized
// (gcd 1, denominator positive). Intermediates run in 128 bits and
// narrowing back to 64 throws std::overflow_error instead of wrapping.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(i64 n) : num_(n) {}
  Rat(i64 n, i64 d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    reduce_();
  }

  i64 num() const { return num_; }
  i64 den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  // floor(num/den) as an integer
  i64 floor() const {
    i64 q = num_ / den_, r = num_ % den_;
    return (r < 0) ? q - 1 : q;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make_(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                 i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make_(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                 i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    i64 g1 = gcd_(a.num_, b.den_), g2 = gcd_(b.num_, a.den_);
    return make_(i128(a.num_ / g1) * (b.num_ / g2),
                 i128(a.den_ / g2) * (b.den_ / g1));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    i64 g1 = gcd_(a.num_, b.num_), g2 = gcd_(b.den_, a.den_);
    Rat r = make_(i128(a.num_ / g1) * (b.den_ / g2),
                  i128(a.den_ / g2) * (b.num_ / g1));
    if (r.den_ < 0) { r.num_ = -r.num_; r.den_ = -r.den_; }
    return r;
  }
  Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
  }
  std::string to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  static i64 gcd_(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i64 t = a % b; a = b; b = t; }
    return a ? a : 1;
  }
  static i128 gcd128_(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i128 t = a % b; a = b; b = t; }
    return a ? a : 1;
  }
  static i64 narrow_(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
      throw std::overflow_error("Rat: 64-bit overflow");
    return i64(v);
  }
  static Rat make_(i128 n, i128 d) {
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128_(n, d);
    Rat r;
    r.num_ = narrow_(n / g);
    r.den_ = narrow_(d / g);
    return r;
  }
  void reduce_() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    i64 g = gcd_(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  i64 num_ = 0;
  i64 den_ = 1;
};

inline Rat abs(const Rat& r) { return r.num() < 0 ? -r : r; }

}  // namespace weylfold

namespace Eigen {
template <>
struct NumTraits<weylfold::Rat> {
  using Self = weylfold::Rat;
  using Real = Self;
  using NonInteger = Self;
  using Literal = Self;
  using Nested = Self;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 10
  };
  static Self epsilon() { return Self(0); }
  static Self dummy_precision() { return Self(0); }
  static Self highest() { return Self(INT64_MAX); }
  static Self lowest() { return Self(INT64_MIN); }
  static int digits10() { return 18; }
};
}  // namespace Eigen
