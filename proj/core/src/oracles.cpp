#include "treewalk/oracles.hpp"

#include <map>
#include <sstream>
#include <tuple>
#include <utility>

namespace treewalk {

namespace {

void guard(const Nat& states, std::uint64_t max_states, const std::string& what) {
  if (states > Nat(max_states)) {
    throw error(errc::feasibility, what + " needs " + states.to_string() +
                                       " states, above the ceiling of " +
                                       std::to_string(max_states));
  }
}

}  // namespace

// --- lattice paths ----------------------------------------------------------

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  std::int64_t h = 0;
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    h += steps_[k] == Step::U ? 1 : -1;
    if (h < 0) {
      throw error(errc::invalid_path,
                  "path goes below the axis at step " + std::to_string(k + 1));
    }
  }
}

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'U') {
      steps.push_back(Step::U);
    } else if (c == 'D') {
      steps.push_back(Step::D);
    } else {
      throw error(errc::parse, "path characters must be U or D: '" + std::string(text) + "'");
    }
  }
  return LatticePath(std::move(steps));
}

std::vector<std::uint32_t> LatticePath::heights() const {
  std::vector<std::uint32_t> h{0};
  h.reserve(steps_.size() + 1);
  for (Step s : steps_) h.push_back(s == Step::U ? h.back() + 1 : h.back() - 1);
  return h;
}

std::uint32_t LatticePath::final_height() const { return heights().back(); }

std::string LatticePath::to_string() const {
  std::string s;
  for (Step st : steps_) s += st == Step::U ? 'U' : 'D';
  return s;
}

PathValue path_weight_poids(const LatticePath& path, const WeightConfig& w) {
  Rat weight{1};
  Rat poids{1};
  std::uint32_t h = 0;
  for (Step s : path.steps()) {
    if (s == Step::U) {
      ++h;
      weight *= w.c1;
      poids *= w.c1;
    } else {
      --h;
      weight *= w.c2;
      poids *= h == 0 ? w.c3 : w.c2;
    }
  }
  return {weight, poids};
}

std::vector<LatticePath> decompose_irreducible(const LatticePath& path) {
  const auto h = path.heights();
  if (h.back() != 0) {
    throw error(errc::decomposition_domain,
                "path " + path.to_string() + " ends at height " + std::to_string(h.back()));
  }
  std::vector<LatticePath> parts;
  auto steps = path.steps();
  std::size_t start = 0;
  for (std::size_t k = 1; k < h.size(); ++k) {
    if (h[k] == 0) {
      parts.emplace_back(std::vector<Step>(steps.begin() + static_cast<std::ptrdiff_t>(start),
                                           steps.begin() + static_cast<std::ptrdiff_t>(k)));
      start = k;
    }
  }
  return parts;
}

Rat enumerate_dyck(const WeightConfig& w, std::uint32_t i, std::uint32_t n,
                   std::uint64_t max_states) {
  guard(pow(Nat(2), n), max_states, "Dyck enumeration of length " + std::to_string(n));

  // Histogram of (#U, #D above the axis, #D onto the axis) over valid paths.
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::uint64_t> hist;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::int64_t h = 0;
    std::uint32_t ups = 0, downs = 0, landings = 0;
    bool valid = true;
    for (std::uint32_t k = 0; k < n; ++k) {
      if ((mask >> k) & 1U) {
        ++h;
        ++ups;
      } else {
        --h;
        if (h < 0) {
          valid = false;
          break;
        }
        if (h == 0) {
          ++landings;
        } else {
          ++downs;
        }
      }
    }
    if (valid && h == static_cast<std::int64_t>(i)) ++hist[{ups, downs, landings}];
  }

  Rat sum{0};
  for (const auto& [key, count] : hist) {
    const auto [ups, downs, landings] = key;
    Rat term = pow(w.c1, ups) * pow(w.c2, downs) * pow(w.c3, landings);
    sum.add_product(term, Rat(Integer(static_cast<unsigned long>(count))));
  }
  return sum;
}

// --- truncated tree -----------------------------------------------------------

Nat TruncatedTree::vertex_count(std::uint32_t m, std::uint32_t depth) {
  Nat total{0};
  for (std::uint32_t i = 0; i <= depth; ++i) total += level_size(m, i);
  return total;
}

TruncatedTree::TruncatedTree(std::uint32_t m, std::uint32_t depth, std::uint64_t max_states)
    : m_(m), depth_(depth) {
  if (m == 0) throw error(errc::invalid_degree, "tree degree must be at least 1");
  const Nat count = vertex_count(m, depth);
  guard(count, max_states, "tree of degree " + std::to_string(m) + " and depth " +
                               std::to_string(depth));
  const auto v_total = static_cast<std::size_t>(count.to_u64());

  parent_.reserve(v_total);
  distance_.reserve(v_total);
  parent_.push_back(no_parent);
  distance_.push_back(0);

  // Vertices are appended breadth-first, so each level and each sibling group
  // occupies a contiguous id range.
  child_begin_.reserve(v_total + 1);
  for (std::uint32_t v = 0; v < parent_.size(); ++v) {
    child_begin_.push_back(static_cast<std::uint32_t>(child_ids_.size()));
    const std::uint32_t d = distance_[v];
    if (d == depth) continue;
    const std::uint32_t kids = d == 0 ? m : m - 1;
    for (std::uint32_t c = 0; c < kids; ++c) {
      const auto id = static_cast<std::uint32_t>(parent_.size());
      parent_.push_back(v);
      distance_.push_back(d + 1);
      child_ids_.push_back(id);
    }
  }
  child_begin_.push_back(static_cast<std::uint32_t>(child_ids_.size()));

  level_ids_.resize(parent_.size());
  for (std::uint32_t v = 0; v < parent_.size(); ++v) {
    level_ids_[v] = v;
    if (v == 0 || distance_[v] != distance_[v - 1]) level_begin_.push_back(v);
  }
  level_begin_.push_back(static_cast<std::uint32_t>(parent_.size()));
}

std::span<const std::uint32_t> TruncatedTree::children(std::uint32_t v) const {
  return std::span<const std::uint32_t>(child_ids_).subspan(
      child_begin_[v], child_begin_[v + 1] - child_begin_[v]);
}

std::vector<std::uint32_t> TruncatedTree::neighbors(std::uint32_t v) const {
  std::vector<std::uint32_t> out;
  if (parent_[v] != no_parent) out.push_back(parent_[v]);
  auto kids = children(v);
  out.insert(out.end(), kids.begin(), kids.end());
  return out;
}

std::span<const std::uint32_t> TruncatedTree::level(std::uint32_t i) const {
  // level_begin_ has one entry per non-empty level plus a closing sentinel.
  if (std::size_t{i} + 1 >= level_begin_.size()) return {};
  return std::span<const std::uint32_t>(level_ids_).subspan(
      level_begin_[i], level_begin_[i + 1] - level_begin_[i]);
}

std::vector<Nat> tree_walk_counts_at_level(std::uint32_t m, std::uint32_t i, std::uint32_t n,
                                           std::uint64_t max_states) {
  if (i > n) return {};
  const TruncatedTree tree(m, n, max_states);
  std::vector<Nat> counts(tree.size());
  counts[0] = Nat(1);
  for (std::uint32_t step = 0; step < n; ++step) {
    std::vector<Nat> next(tree.size());
    for (std::uint32_t v = 0; v < tree.size(); ++v) {
      if (counts[v].is_zero()) continue;
      for (std::uint32_t u : tree.neighbors(v)) next[u] += counts[v];
    }
    counts = std::move(next);
  }
  std::vector<Nat> out;
  for (std::uint32_t v : tree.level(i)) out.push_back(counts[v]);
  return out;
}

Nat tree_walk_count(std::uint32_t m, std::uint32_t i, std::uint32_t n, std::uint64_t max_states) {
  const auto counts = tree_walk_counts_at_level(m, i, n, max_states);
  return counts.empty() ? Nat(0) : counts.front();
}

// --- free group ---------------------------------------------------------------

GroupWord::GroupWord(std::vector<std::int32_t> letters) : letters_(std::move(letters)) {
  for (auto l : letters_) {
    if (l == 0) throw error(errc::validation, "group word letters must be nonzero");
  }
}

GroupWord GroupWord::parse(std::string_view text) {
  std::vector<std::int32_t> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    bool inverse = false;
    std::string_view t = tok;
    if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
      inverse = true;
      t.remove_suffix(3);
    }
    if (t.size() < 2 || t.front() != 'x') {
      throw error(errc::parse, "bad group letter '" + tok + "'");
    }
    const auto idx = Nat::parse(t.substr(1)).to_u64();
    if (idx == 0 || idx > INT32_MAX) throw error(errc::parse, "bad generator index in '" + tok + "'");
    const auto k = static_cast<std::int32_t>(idx);
    letters.push_back(inverse ? -k : k);
  }
  return GroupWord(std::move(letters));
}

bool GroupWord::is_reduced() const {
  for (std::size_t k = 1; k < letters_.size(); ++k) {
    if (letters_[k] == -letters_[k - 1]) return false;
  }
  return true;
}

GroupWord GroupWord::reduced() const {
  std::vector<std::int32_t> stack;
  for (auto l : letters_) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return GroupWord(std::move(stack));
}

std::string GroupWord::to_string() const {
  std::string s;
  for (auto l : letters_) {
    if (!s.empty()) s += ' ';
    s += "x" + std::to_string(l < 0 ? -l : l);
    if (l < 0) s += "^-1";
  }
  return s;
}

namespace {

struct FreeGroupSearch {
  std::int32_t g;
  std::span<const std::int32_t> target;
  std::vector<std::int32_t> stack;
  std::uint64_t hits = 0;

  void run(std::uint32_t remaining) {
    if (remaining == 0) {
      if (std::equal(stack.begin(), stack.end(), target.begin(), target.end())) ++hits;
      return;
    }
    // Each remaining step shortens the reduced word by at most one.
    if (stack.size() > target.size() + remaining) return;
    for (std::int32_t k = 1; k <= g; ++k) {
      for (std::int32_t letter : {k, -k}) {
        if (!stack.empty() && stack.back() == -letter) {
          stack.pop_back();
          run(remaining - 1);
          stack.push_back(-letter);
        } else {
          stack.push_back(letter);
          run(remaining - 1);
          stack.pop_back();
        }
      }
    }
  }
};

}  // namespace

Nat free_group_count(std::uint32_t g, const GroupWord& target, std::uint32_t n,
                     std::uint64_t max_states) {
  if (g == 0 || g > INT32_MAX) throw error(errc::validation, "need at least one generator");
  if (!target.is_reduced()) {
    throw error(errc::validation, "target word '" + target.to_string() + "' is not reduced");
  }
  for (auto l : target.letters()) {
    if (static_cast<std::uint32_t>(l < 0 ? -l : l) > g) {
      throw error(errc::validation, "target word '" + target.to_string() +
                                        "' uses a generator beyond x" + std::to_string(g));
    }
  }
  guard(pow(Nat(2 * std::uint64_t{g}), n), max_states,
        "free group enumeration of length " + std::to_string(n));

  FreeGroupSearch search{static_cast<std::int32_t>(g), target.letters(), {}, 0};
  search.stack.reserve(n);
  search.run(n);
  return Nat(search.hits);
}

}  // namespace treewalk
