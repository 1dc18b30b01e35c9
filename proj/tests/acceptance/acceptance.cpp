// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Every comparison is exact; the runtime bounds are enforced as stated.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "treewalk/oracles.hpp"
#include "treewalk/recurrence.hpp"
#include "treewalk/series.hpp"

using namespace treewalk;

namespace {

/// Collects the first mismatch of a criterion.
struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t comparisons = 0;

  void expect(bool cond, const std::function<std::string()>& describe) {
    ++comparisons;
    if (!cond && ok) {
      ok = false;
      detail = describe();
    }
  }
};

std::string at(std::uint32_t i, std::uint32_t n) {
  return "(i=" + std::to_string(i) + ", n=" + std::to_string(n) + ")";
}

const std::vector<WeightConfig>& general_weights() {
  static const std::vector<WeightConfig> ws{
      WeightConfig{Rat(1), Rat(1), Rat(1), std::nullopt},
      WeightConfig{Rat(1), Rat(2), Rat(3), std::nullopt},
      WeightConfig{Rat(1), Rat(3), Rat(4), std::nullopt},
      WeightConfig{Rat(2), Rat(1), Rat(5), std::nullopt},
      WeightConfig{Rat(1), Rat::normalize(1, 2), Rat(2), std::nullopt},
  };
  return ws;
}

Outcome central_binomial() {
  Outcome o;
  const auto table = build_table(tree_weights(2), 40);
  const PowerSeries gf = gf_f(2, 0, 40);
  for (std::uint32_t n = 0; n <= 20; ++n) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
    const Rat expected(binom);
    o.expect(table.at(0, 2 * n) == expected, [&] {
      return "dp A_2(0," + std::to_string(2 * n) + ") = " + table.at(0, 2 * n).to_string() +
             ", C(2n,n) = " + expected.to_string();
    });
    o.expect(gf[2 * n] == expected, [&] {
      return "gf A_2(0," + std::to_string(2 * n) + ") = " + gf[2 * n].to_string() +
             ", C(2n,n) = " + expected.to_string();
    });
  }
  return o;
}

Outcome boddington_vs_recurrence() {
  Outcome o;
  for (std::uint32_t m = 2; m <= 8; ++m) {
    const auto table = build_table(tree_weights(m), 60);
    for (std::uint32_t i = 0; i <= 6; ++i) {
      const PowerSeries closed = gf_f_closed_form(m, i, 60);
      const PowerSeries factored = gf_f(m, i, 60);
      for (std::uint32_t n = 0; n <= 60; ++n) {
        o.expect(closed[n] == table.at(i, n), [&] {
          return "m=" + std::to_string(m) + " " + at(i, n) + ": closed form " +
                 closed[n].to_string() + " vs dp " + table.at(i, n).to_string();
        });
        o.expect(factored[n] == table.at(i, n), [&] {
          return "m=" + std::to_string(m) + " " + at(i, n) + ": d_i " + factored[n].to_string() +
                 " vs dp " + table.at(i, n).to_string();
        });
      }
    }
  }
  return o;
}

Outcome general_weights_equivalence() {
  Outcome o;
  for (const auto& w : general_weights()) {
    const auto table = build_table(w, 14);
    for (std::uint32_t i = 0; i <= 14; ++i) {
      const PowerSeries gf = gf_d_i(w, i, 14);
      for (std::uint32_t n = i; n <= 14; ++n) {
        const Rat e = enumerate_dyck(w, i, n);
        o.expect(e == table.at(i, n) && e == gf[n], [&] {
          return w.to_string() + " " + at(i, n) + ": enum " + e.to_string() + ", dp " +
                 table.at(i, n).to_string() + ", gf " + gf[n].to_string();
        });
      }
    }
  }
  return o;
}

Outcome tree_oracle() {
  Outcome o;
  for (std::uint32_t m = 2; m <= 4; ++m) {
    const auto table = build_table(tree_weights(m), 10);
    for (std::uint32_t n = 0; n <= 10; ++n) {
      for (std::uint32_t i = 0; i <= n; ++i) {
        const Nat c = tree_walk_count(m, i, n);
        o.expect(Rat(c) == table.at(i, n), [&] {
          return "m=" + std::to_string(m) + " " + at(i, n) + ": tree " + c.to_string() +
                 " vs dp " + table.at(i, n).to_string();
        });
      }
    }
  }
  return o;
}

/// Reduced words of a given length: x1^len, x1^-len, and for g = 2 also
/// x2 x1^-1 x2 ... and x1 x2 x1 .... The empty word is the only length-0 word.
std::vector<GroupWord> targets(std::uint32_t g, std::uint32_t len) {
  if (len == 0) return {GroupWord()};
  std::vector<GroupWord> out{GroupWord(std::vector<std::int32_t>(len, 1)),
                             GroupWord(std::vector<std::int32_t>(len, -1))};
  if (g >= 2) {
    std::vector<std::int32_t> a(len), b(len);
    for (std::uint32_t k = 0; k < len; ++k) {
      a[k] = k % 2 == 0 ? 2 : -1;
      b[k] = k % 2 == 0 ? 1 : 2;
    }
    out.emplace_back(a);
    out.emplace_back(b);
  }
  return out;
}

Outcome free_group() {
  Outcome o;
  for (std::uint32_t g = 1; g <= 2; ++g) {
    const auto table = build_table(tree_weights(2 * g), 8);
    for (std::uint32_t n = 0; n <= 8; ++n) {
      for (std::uint32_t i = 0; i <= n; ++i) {
        const auto words = targets(g, i);
        o.expect(i == 0 || words.size() >= 2, [] { return std::string("too few target words"); });
        for (const auto& word : words) {
          o.expect(word.is_reduced(), [&] { return word.to_string() + " is not reduced"; });
          const Nat c = free_group_count(g, word, n);
          o.expect(Rat(c) == table.at(i, n), [&] {
            return "g=" + std::to_string(g) + " word '" + word.to_string() + "' n=" +
                   std::to_string(n) + ": " + c.to_string() + " vs A_" + std::to_string(2 * g) +
                   " = " + table.at(i, n).to_string();
          });
        }
      }
    }
  }
  return o;
}

Outcome algebraic_residuals() {
  Outcome o;
  constexpr std::size_t order = 60;  // identities hold mod t^61
  std::vector<WeightConfig> ws = general_weights();
  for (std::uint32_t m = 2; m <= 8; ++m) ws.push_back(tree_weights(m));
  const PowerSeries one = PowerSeries::constant(Rat(1), order);
  for (const auto& w : ws) {
    const PowerSeries a = gf_a(w, order);
    const PowerSeries t2 = PowerSeries::monomial(w.c1 * w.c2, 2, order);
    const PowerSeries quad = t2 * a * a - a + one;
    o.expect(quad == PowerSeries(order),
             [&] { return w.to_string() + ": quadratic residual " + quad.to_string(); });

    const PowerSeries radicand = one - PowerSeries::monomial(Rat(4) * w.c1 * w.c2, 2, order);
    const PowerSeries root = ps_sqrt(radicand);
    o.expect(ps_mul(root, root) == radicand,
             [&] { return w.to_string() + ": sqrt squared " + ps_mul(root, root).to_string(); });

    const PowerSeries d = gf_d_i(w, 0, order);
    const PowerSeries step = ps_shift_mul(a, 1) * w.c1;
    for (std::uint32_t i = 0; i <= 6; ++i) {
      const PowerSeries lhs = gf_d_i(w, i, order);
      const PowerSeries rhs = ps_mul(d, ps_pow(step, i));
      o.expect(lhs == rhs, [&] { return w.to_string() + ": d_" + std::to_string(i) + " mismatch"; });
    }
  }
  return o;
}

Outcome mass_conservation() {
  Outcome o;
  for (std::uint32_t m = 2; m <= 5; ++m) {
    const auto table = build_table(tree_weights(m), 16);
    for (std::uint32_t n = 0; n <= 16; ++n) {
      const Rat total = mass_check(m, n, table);
      const Rat expected = pow(Rat(static_cast<std::int64_t>(m)), n);
      o.expect(total == expected, [&] {
        return "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + total.to_string() +
               " != " + expected.to_string();
      });
    }
  }
  return o;
}

std::vector<Rat> read_bfile(const std::string& name) {
  std::ifstream in(std::string(TREEWALK_FIXTURE_DIR) + "/" + name);
  std::vector<Rat> out;
  std::string idx, val;
  while (in >> idx >> val) out.push_back(Rat::parse(val));
  return out;
}

Outcome sequence_prefixes() {
  Outcome o;
  const struct {
    std::uint32_t m;
    std::vector<std::int64_t> prefix;
    const char* fixture;
  } cases[] = {{3, {1, 3, 15, 87, 543}, "A089022_prefix.txt"},
               {4, {1, 4, 28, 232}, "A035610_prefix.txt"}};
  for (const auto& c : cases) {
    const auto n_top = static_cast<std::uint32_t>(2 * (c.prefix.size() - 1));
    const auto table = build_table(tree_weights(c.m), n_top);
    const PowerSeries gf = gf_f(c.m, 0, n_top);
    const PowerSeries closed = gf_f_closed_form(c.m, 0, n_top);
    const auto fixture = read_bfile(c.fixture);
    o.expect(fixture.size() >= c.prefix.size(),
             [&] { return std::string("fixture ") + c.fixture + " is too short"; });
    for (std::uint32_t k = 0; k < c.prefix.size(); ++k) {
      const std::uint32_t n = 2 * k;
      const Rat expected(c.prefix[k]);
      std::vector<std::pair<const char*, Rat>> got{
          {"dp", table.at(0, n)},
          {"gf", gf[n]},
          {"closed form", closed[n]},
          {"tree", Rat(tree_walk_count(c.m, 0, n))},
          {"dyck enum", enumerate_dyck(tree_weights(c.m), 0, n)},
      };
      if (c.m % 2 == 0) got.emplace_back("free group", Rat(free_group_count(c.m / 2, GroupWord(), n)));
      if (k < fixture.size()) got.emplace_back("fixture", fixture[k]);
      for (const auto& [method, value] : got) {
        o.expect(value == expected, [&] {
          return "m=" + std::to_string(c.m) + " n=" + std::to_string(n) + " " + method + ": " +
                 value.to_string() + " != " + expected.to_string();
        });
      }
    }
  }
  return o;
}

Outcome parity_vanishing() {
  Outcome o;
  auto check_table = [&](const WalkTable& t, const std::string& tag) {
    for (std::uint32_t n = 0; n <= t.n_max(); ++n) {
      for (std::uint32_t i = 0; i <= t.n_max(); ++i) {
        if (i <= n && (n - i) % 2 == 0) continue;
        o.expect(t.at(i, n).is_zero(), [&] { return tag + " table " + at(i, n); });
      }
    }
  };
  auto check_series = [&](const PowerSeries& s, std::uint32_t i, const std::string& tag) {
    for (std::uint32_t n = 0; n <= s.order(); ++n) {
      if (n >= i && (n - i) % 2 == 0) continue;
      o.expect(s[n].is_zero(), [&] { return tag + " series " + at(i, n); });
    }
  };
  for (std::uint32_t m = 2; m <= 8; ++m) {
    const std::string tag = "m=" + std::to_string(m);
    check_table(build_table(tree_weights(m), 60), tag);
    for (std::uint32_t i = 0; i <= 6; ++i) {
      check_series(gf_f(m, i, 60), i, tag);
      check_series(gf_f_closed_form(m, i, 60), i, tag);
    }
  }
  for (const auto& w : general_weights()) {
    check_table(build_table(w, 14), w.to_string());
    for (std::uint32_t i = 0; i <= 14; ++i) check_series(gf_d_i(w, i, 14), i, w.to_string());
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "central binomial coefficients A_2(0,2n) = C(2n,n), n <= 20, dp and gf", 1.0,
       central_binomial},
      {2, "closed form f_m^(i) vs recurrence, m in 2..8, i in 0..6, up to t^60", 30.0,
       boddington_vs_recurrence},
      {3, "general weights: enum == dp == gf for i <= n <= 14", 60.0, general_weights_equivalence},
      {4, "tree oracle == A_m(i,n), m in 2..4, n <= 10", 60.0, tree_oracle},
      {5, "free group word counts == A_2g(i,n), g in 1..2, n <= 8", 60.0, free_group},
      {6, "algebraic residuals mod t^61 and d_i product structure", 60.0, algebraic_residuals},
      {7, "mass conservation sum V_m(i) A_m(i,n) = m^n, m in 2..5, n <= 16", 60.0,
       mass_conservation},
      {8, "sequence prefixes for m = 3 and m = 4 across all methods and fixtures", 60.0,
       sequence_prefixes},
      {9, "parity vanishing across criteria 2-3 inputs", 60.0, parity_vanishing},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.budget_seconds) {
      o.ok = false;
      o.detail = "runtime " + std::to_string(secs) + " s exceeds " +
                 std::to_string(c.budget_seconds) + " s";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.name << " ("
              << o.comparisons << " comparisons, " << timing << ")";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << '\n';
    if (!o.ok) ++failed;
  }
  std::cout << (std::size(criteria) - static_cast<std::size_t>(failed)) << "/" << std::size(criteria)
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
