#pragma once

// Exact arbitrary-precision scalars. Nat and Rat are thin value types over
// GMP; every Rat is kept in lowest terms with a positive denominator.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "treewalk/error.hpp"

namespace treewalk {

using Integer = mpz_class;

/// Non-negative arbitrary-precision integer.
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit Nat(Integer v);

  /// Parses a plain decimal string ("0", "123").
  static Nat parse(std::string_view text);

  const Integer& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  std::string to_string() const { return value_.get_str(); }

  /// Narrowing conversion; throws out_of_range if the value does not fit.
  std::uint64_t to_u64() const;

  Nat& operator+=(const Nat& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Nat& operator*=(const Nat& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  friend Nat operator+(Nat lhs, const Nat& rhs) { return lhs += rhs; }
  friend Nat operator*(Nat lhs, const Nat& rhs) { return lhs *= rhs; }

  friend bool operator==(const Nat& a, const Nat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  Integer value_{0};
};

Nat pow(const Nat& base, unsigned long exponent);

/// Exact rational in canonical form: den > 0 and gcd(|num|, den) = 1.
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t v);  // NOLINT(google-explicit-constructor)
  explicit Rat(const Integer& v) : value_(v) {}
  explicit Rat(const Nat& v) : value_(v.value()) {}

  /// Builds num/den in canonical form; throws division_by_zero if den = 0.
  static Rat normalize(const Integer& num, const Integer& den);

  /// Accepts "n", "-n", or "n/d" in decimal. Result is canonical.
  static Rat parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }

  /// Lossless extraction; throws validation if den != 1.
  Integer to_integer() const;

  /// "num" when integral, "num/den" otherwise.
  std::string to_string() const;

  Rat& operator+=(const Rat& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rat& operator-=(const Rat& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rat& operator*=(const Rat& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rat& operator/=(const Rat& rhs);

  Rat operator-() const {
    Rat r;
    r.value_ = -value_;
    return r;
  }

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  /// Multiply-accumulate without a temporary: *this += a * b.
  void add_product(const Rat& a, const Rat& b);

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_{0};
};

Rat pow(const Rat& base, unsigned long exponent);

std::ostream& operator<<(std::ostream& os, const Nat& v);
std::ostream& operator<<(std::ostream& os, const Rat& v);

}  // namespace treewalk
