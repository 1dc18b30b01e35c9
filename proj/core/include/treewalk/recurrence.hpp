#pragma once

// Walk counts A(i,n) via the three-clause recurrence
//
//   A(i,0) = [i == 0]
//   A(0,n) = c3 * A(1,n-1)                          n >= 1
//   A(i,n) = c1 * A(i-1,n-1) + c2 * A(i+1,n-1)      i >= 1, n >= 1
//
// With (c1,c2,c3) = (1, m-1, m) this counts length-n walks on the m-regular
// tree from a fixed vertex to a fixed vertex at distance i.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treewalk/numeric.hpp"

namespace treewalk {

/// Step weights: c1 on U, c2 on D staying above the axis, c3 on D landing on it.
struct WeightConfig {
  Rat c1{1};
  Rat c2{1};
  Rat c3{1};
  /// Set only when the triple came from tree_weights(m).
  std::optional<std::uint32_t> tree_degree;

  std::string to_string() const;

  friend bool operator==(const WeightConfig&, const WeightConfig&) = default;
};

/// Weights for the m-regular tree: (1, m-1, m). Throws invalid_degree for m = 0.
WeightConfig tree_weights(std::uint32_t m);

/// Triangular table of A(i,n) for 0 <= i <= n <= n_max.
class WalkTable {
 public:
  const WeightConfig& weights() const noexcept { return weights_; }
  std::uint32_t n_max() const noexcept { return n_max_; }

  /// A(i,n). Zero for i > n; throws out_of_range for n > n_max.
  const Rat& at(std::uint32_t i, std::uint32_t n) const;

  /// Column n: A(0..n, n).
  const std::vector<Rat>& column(std::uint32_t n) const;

  friend WalkTable build_table(const WeightConfig& weights, std::uint32_t n_max);
  friend WalkTable walk_table_from_json(std::string_view json);

 private:
  WalkTable(WeightConfig weights, std::uint32_t n_max)
      : weights_(std::move(weights)), n_max_(n_max) {}

  WeightConfig weights_;
  std::uint32_t n_max_ = 0;
  // columns_[n][i] = A(i,n), i = 0..n
  std::vector<std::vector<Rat>> columns_;
};

/// Fills the table column by column in n.
WalkTable build_table(const WeightConfig& weights, std::uint32_t n_max);

/// Same as table.at(i, n); kept as a free function to mirror the other engines.
Rat walk_count(const WalkTable& table, std::uint32_t i, std::uint32_t n);

/// Number of vertices at distance i from the root of the m-regular tree.
Nat level_size(std::uint32_t m, std::uint32_t i);

/// Sum over i of level_size(m,i) * A_m(i,n). Equals m^n.
///
/// The table must come from tree_weights(m) with m >= 2; anything else is a
/// usage error.
Rat mass_check(std::uint32_t m, std::uint32_t n, const WalkTable& table);

/// {"weights": {...}, "n_max": N, "entries": [[row i=0], ...]}, all numbers as
/// decimal strings. Row i lists A(i,n) for n = 0..n_max.
std::string to_json(const WalkTable& table);

/// Inverse of to_json. The parsed entries are taken as-is, not recomputed.
WalkTable walk_table_from_json(std::string_view json);

}  // namespace treewalk
