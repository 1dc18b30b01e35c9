#pragma once

// Truncated formal power series in t over Rat, and the generating functions
// for weighted Dyck paths and walks on regular trees built from them.
//
// A series of order N stores the coefficients of t^0..t^N. Binary operations
// truncate to the smaller order of their operands.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "treewalk/numeric.hpp"
#include "treewalk/recurrence.hpp"

namespace treewalk {

class PowerSeries {
 public:
  /// Zero series of the given order.
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
  /// Takes coefficients t^0..t^{k}; the order is k. Must be non-empty.
  explicit PowerSeries(std::vector<Rat> coeffs);
  PowerSeries(std::initializer_list<Rat> coeffs)
      : PowerSeries(std::vector<Rat>(coeffs)) {}

  static PowerSeries constant(const Rat& c, std::size_t order);
  /// c * t^k, truncated (zero when k > order).
  static PowerSeries monomial(const Rat& c, std::size_t k, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rat& operator[](std::size_t k) const { return coeffs_[k]; }
  /// Coefficient of t^k; throws out_of_range past the truncation order.
  const Rat& coeff(std::size_t k) const;
  std::span<const Rat> coeffs() const noexcept { return coeffs_; }

  PowerSeries truncated(std::size_t order) const;

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(const Rat& scalar);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rat& s) { return a *= s; }
  friend PowerSeries operator*(const Rat& s, PowerSeries a) { return a *= s; }
  PowerSeries operator-() const;

  /// Coefficient-wise equality up to the smaller of the two orders.
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

  /// "1 + 2*t^2 - 1/4*t^3 + O(t^5)"
  std::string to_string() const;

 private:
  std::vector<Rat> coeffs_;
};

/// Cauchy product, truncated to min(order f, order g).
PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g);
inline PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) { return ps_mul(f, g); }

/// f^e by binary powering; f^0 is the constant 1 at f's order.
PowerSeries ps_pow(const PowerSeries& f, unsigned e);

/// Multiplicative inverse. Throws not_invertible when f_0 = 0.
PowerSeries ps_inv(const PowerSeries& f);

/// Square root with constant term 1. Throws unsupported_radicand unless f_0 = 1.
PowerSeries ps_sqrt(const PowerSeries& f);

/// f / t^k. Requires f_0..f_{k-1} to be exactly zero (throws not_divisible
/// otherwise); the result has order(f) - k.
PowerSeries ps_shift_div(const PowerSeries& f, std::size_t k);

/// f * t^k, keeping the order of f (high terms fall off).
PowerSeries ps_shift_mul(const PowerSeries& f, std::size_t k);

// ---------------------------------------------------------------------------
// Generating functions. Every function takes the truncation order explicitly.

/// Weight enumerator of all Dyck paths: the power-series root of
/// (c1 c2 t^2) a^2 - a + 1 = 0, i.e. (1 - sqrt(1 - 4 c1 c2 t^2)) / (2 c1 c2 t^2).
/// Returns the constant 1 when c1 c2 = 0.
PowerSeries gf_a(const WeightConfig& w, std::size_t order);

struct IrreducibleEnumerators {
  PowerSeries by_weight;  ///< b(t) = c1 c2 t^2 a(t)
  PowerSeries by_poids;   ///< c(t) = (c3/c2) b(t)
};

/// b(t) and c(t). Throws degenerate_weights when c2 = 0.
IrreducibleEnumerators gf_b_c(const WeightConfig& w, std::size_t order);

/// d_i(t) = d(t) (c1 t a(t))^i with d(t) = 1/(1 - c(t)); coefficient of t^n is
/// A(i,n). Throws degenerate_weights when c2 = 0.
PowerSeries gf_d_i(const WeightConfig& w, std::uint32_t i, std::size_t order);

/// f_m^(i)(t) = gf_d_i(tree_weights(m), i, order). Throws invalid_degree for m < 2.
PowerSeries gf_f(std::uint32_t m, std::uint32_t i, std::size_t order);

/// f_m^(i)(t) expanded straight from the radical form
///   2(m-1) / (m-2 + m R) * ((1 - R) / (2(m-1) t))^i,   R = sqrt(1 - 4(m-1) t^2).
/// An independent route to gf_f. Throws invalid_degree for m < 2.
PowerSeries gf_f_closed_form(std::uint32_t m, std::uint32_t i, std::size_t order);

}  // namespace treewalk
