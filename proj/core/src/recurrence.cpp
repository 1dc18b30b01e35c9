#include "treewalk/recurrence.hpp"

#include <json.hpp>

namespace treewalk {

std::string WeightConfig::to_string() const {
  std::string s = "(" + c1.to_string() + ", " + c2.to_string() + ", " + c3.to_string() + ")";
  if (tree_degree) s += " [m=" + std::to_string(*tree_degree) + "]";
  return s;
}

WeightConfig tree_weights(std::uint32_t m) {
  if (m == 0) {
    throw error(errc::invalid_degree, "tree degree must be at least 1, got 0");
  }
  const auto mm = static_cast<std::int64_t>(m);
  return WeightConfig{Rat(1), Rat(mm - 1), Rat(mm), m};
}

const Rat& WalkTable::at(std::uint32_t i, std::uint32_t n) const {
  static const Rat zero{0};
  if (n > n_max_) {
    throw error(errc::out_of_range,
                "n = " + std::to_string(n) + " exceeds table order " + std::to_string(n_max_));
  }
  if (i > n) return zero;
  return columns_[n][i];
}

const std::vector<Rat>& WalkTable::column(std::uint32_t n) const {
  if (n > n_max_) {
    throw error(errc::out_of_range,
                "n = " + std::to_string(n) + " exceeds table order " + std::to_string(n_max_));
  }
  return columns_[n];
}

WalkTable build_table(const WeightConfig& weights, std::uint32_t n_max) {
  WalkTable table(weights, n_max);
  auto& cols = table.columns_;
  cols.reserve(std::size_t{n_max} + 1);
  cols.push_back({Rat(1)});

  for (std::uint32_t n = 1; n <= n_max; ++n) {
    const auto& prev = cols.back();  // length n
    std::vector<Rat> col(std::size_t{n} + 1);
    // A(1,n-1) lives at prev[1] only when n-1 >= 1.
    if (n >= 2) col[0] = weights.c3 * prev[1];
    for (std::uint32_t i = 1; i <= n; ++i) {
      Rat v = weights.c1 * prev[i - 1];
      if (i + 1 <= n - 1) v.add_product(weights.c2, prev[i + 1]);
      col[i] = std::move(v);
    }
    cols.push_back(std::move(col));
  }

  if (weights.tree_degree) {
    for (const auto& col : cols) {
      for (const auto& v : col) {
        if (!v.is_integer() || v.sign() < 0) {
          throw std::logic_error("tree walk table produced non-natural entry " + v.to_string());
        }
      }
    }
  }
  return table;
}

Rat walk_count(const WalkTable& table, std::uint32_t i, std::uint32_t n) { return table.at(i, n); }

Nat level_size(std::uint32_t m, std::uint32_t i) {
  if (i == 0) return Nat(1);
  if (m == 0) return Nat(0);
  return Nat(m) * pow(Nat(m - 1), i - 1);
}

Rat mass_check(std::uint32_t m, std::uint32_t n, const WalkTable& table) {
  if (m < 2) {
    throw error(errc::usage, "mass check needs m >= 2, got " + std::to_string(m));
  }
  if (!table.weights().tree_degree || *table.weights().tree_degree != m ||
      table.weights() != tree_weights(m)) {
    throw error(errc::usage, "table weights " + table.weights().to_string() +
                                 " were not built from tree_weights(" + std::to_string(m) + ")");
  }
  Rat total{0};
  for (std::uint32_t i = 0; i <= n; ++i) {
    total.add_product(Rat(level_size(m, i)), table.at(i, n));
  }
  return total;
}

namespace {

using nlohmann::ordered_json;

ordered_json weights_json(const WeightConfig& w) {
  ordered_json j;
  j["c1"] = w.c1.to_string();
  j["c2"] = w.c2.to_string();
  j["c3"] = w.c3.to_string();
  if (w.tree_degree) j["m"] = std::to_string(*w.tree_degree);
  return j;
}

std::string string_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw error(errc::parse, std::string("missing or non-string field '") + key + "'");
  }
  return j.at(key).get<std::string>();
}

std::uint32_t small_nat(const std::string& s) {
  auto v = Nat::parse(s).to_u64();
  if (v > UINT32_MAX) throw error(errc::out_of_range, "value too large: " + s);
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::string to_json(const WalkTable& table) {
  ordered_json j;
  j["weights"] = weights_json(table.weights());
  j["n_max"] = std::to_string(table.n_max());
  auto rows = ordered_json::array();
  for (std::uint32_t i = 0; i <= table.n_max(); ++i) {
    auto row = ordered_json::array();
    for (std::uint32_t n = 0; n <= table.n_max(); ++n) row.push_back(table.at(i, n).to_string());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

WalkTable walk_table_from_json(std::string_view json) {
  ordered_json j;
  try {
    j = ordered_json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(errc::parse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("weights") || !j.contains("entries")) {
    throw error(errc::parse, "walk table JSON needs 'weights' and 'entries'");
  }
  const auto& wj = j.at("weights");
  WeightConfig w{Rat::parse(string_field(wj, "c1")), Rat::parse(string_field(wj, "c2")),
                 Rat::parse(string_field(wj, "c3")), std::nullopt};
  if (wj.contains("m")) w.tree_degree = small_nat(string_field(wj, "m"));

  const std::uint32_t n_max = small_nat(string_field(j, "n_max"));
  const auto& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != std::size_t{n_max} + 1) {
    throw error(errc::parse, "entries must hold n_max + 1 rows");
  }

  WalkTable table(std::move(w), n_max);
  table.columns_.resize(std::size_t{n_max} + 1);
  for (std::uint32_t n = 0; n <= n_max; ++n) table.columns_[n].resize(std::size_t{n} + 1);
  for (std::uint32_t i = 0; i <= n_max; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || row.size() != std::size_t{n_max} + 1) {
      throw error(errc::parse, "row " + std::to_string(i) + " must hold n_max + 1 entries");
    }
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      if (!row.at(n).is_string()) throw error(errc::parse, "entries must be decimal strings");
      Rat v = Rat::parse(row.at(n).get<std::string>());
      if (i > n) {
        if (!v.is_zero()) {
          throw error(errc::parse, "nonzero entry below the diagonal at i=" + std::to_string(i) +
                                       ", n=" + std::to_string(n));
        }
        continue;
      }
      table.columns_[n][i] = std::move(v);
    }
  }
  return table;
}

}  // namespace treewalk
