#pragma once

// Brute-force enumerators used as ground truth for the recurrence and series
// engines: weighted Dyck paths, walks on an explicit truncated tree, and words
// in a free group. Each is deliberately naive.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treewalk/numeric.hpp"
#include "treewalk/recurrence.hpp"

namespace treewalk {

/// Default ceiling on the enumeration space of any oracle.
inline constexpr std::uint64_t default_max_states = 10'000'000;

enum class Step : std::uint8_t { U, D };

/// U/D path from the origin that never goes below the x-axis.
class LatticePath {
 public:
  LatticePath() = default;
  /// Throws invalid_path if some prefix has more D than U steps.
  explicit LatticePath(std::vector<Step> steps);

  /// "UUDD" style; throws parse on other characters.
  static LatticePath parse(std::string_view text);

  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  /// h_0..h_n with h_0 = 0.
  std::vector<std::uint32_t> heights() const;
  std::uint32_t final_height() const;
  std::string to_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
};

struct PathValue {
  Rat weight;  ///< c1^#U * c2^#D
  Rat poids;   ///< as weight, but c3 for every D that lands on the axis
};

/// Scalar parts of weight and poids; the power of t is the path length.
PathValue path_weight_poids(const LatticePath& path, const WeightConfig& w);

/// Splits an axis-ending path into its irreducible components (arches).
/// Throws decomposition_domain if the path ends above the axis.
std::vector<LatticePath> decompose_irreducible(const LatticePath& path);

/// Sum of poids over all n-step paths ending at height i, by trying all 2^n
/// step sequences. Throws feasibility if 2^n exceeds max_states.
Rat enumerate_dyck(const WeightConfig& w, std::uint32_t i, std::uint32_t n,
                   std::uint64_t max_states = default_max_states);

/// Rooted m-regular tree cut off at a fixed depth. The root has m children and
/// every other internal vertex has m-1. Vertex 0 is the root; vertices are
/// numbered level by level in construction order.
class TruncatedTree {
 public:
  static constexpr std::uint32_t no_parent = UINT32_MAX;

  /// Throws feasibility when the vertex count exceeds max_states.
  TruncatedTree(std::uint32_t m, std::uint32_t depth,
                std::uint64_t max_states = default_max_states);

  /// Vertex count of the truncated tree, without building it.
  static Nat vertex_count(std::uint32_t m, std::uint32_t depth);

  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return parent_.size(); }

  std::uint32_t parent(std::uint32_t v) const { return parent_[v]; }
  std::uint32_t distance(std::uint32_t v) const { return distance_[v]; }
  std::span<const std::uint32_t> children(std::uint32_t v) const;
  /// Parent (if any) followed by children.
  std::vector<std::uint32_t> neighbors(std::uint32_t v) const;
  /// Vertex ids at distance i, in construction order. Empty past the depth.
  std::span<const std::uint32_t> level(std::uint32_t i) const;

 private:
  std::uint32_t m_;
  std::uint32_t depth_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> distance_;
  std::vector<std::uint32_t> child_begin_;  // children of v: [child_begin_[v], child_begin_[v+1])
  std::vector<std::uint32_t> child_ids_;
  std::vector<std::uint32_t> level_ids_;
  std::vector<std::uint32_t> level_begin_;
};

/// Counts of n-step walks from the root of the m-regular tree ending at each
/// vertex of level i, in construction order.
std::vector<Nat> tree_walk_counts_at_level(std::uint32_t m, std::uint32_t i, std::uint32_t n,
                                           std::uint64_t max_states = default_max_states);

/// Number of n-step walks from the root to the first-constructed vertex at
/// distance i. Zero when i > n.
Nat tree_walk_count(std::uint32_t m, std::uint32_t i, std::uint32_t n,
                    std::uint64_t max_states = default_max_states);

/// Word over generators x_1..x_g and inverses. Letter k > 0 is x_k, -k its inverse.
class GroupWord {
 public:
  GroupWord() = default;
  /// Throws validation on a zero letter.
  explicit GroupWord(std::vector<std::int32_t> letters);

  /// Space-separated "x1 x2^-1"; the empty string is the identity.
  static GroupWord parse(std::string_view text);

  std::span<const std::int32_t> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_reduced() const;
  /// Free reduction by stack cancellation.
  GroupWord reduced() const;
  std::string to_string() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<std::int32_t> letters_;
};

/// Number of length-n products of x_1^{+-1}..x_g^{+-1} that freely reduce to
/// target. Throws validation for an unreduced target or letters beyond x_g, and
/// feasibility when (2g)^n exceeds max_states.
Nat free_group_count(std::uint32_t g, const GroupWord& target, std::uint32_t n,
                     std::uint64_t max_states = default_max_states);

}  // namespace treewalk
