#include "treewalk/verify.hpp"

#include <algorithm>
#include <utility>

#include "treewalk/series.hpp"

namespace treewalk {

std::optional<VerifyScope> parse_scope(std::string_view text) {
  if (text == "tree") return VerifyScope::tree;
  if (text == "dyck") return VerifyScope::dyck;
  if (text == "freegroup") return VerifyScope::freegroup;
  if (text == "all") return VerifyScope::all;
  return std::nullopt;
}

std::vector<WeightConfig> verification_weights() {
  return {tree_weights(2),
          tree_weights(3),
          tree_weights(4),
          WeightConfig{Rat(1), Rat(1), Rat(1), std::nullopt},
          WeightConfig{Rat(2), Rat(1), Rat(5), std::nullopt},
          WeightConfig{Rat(1), Rat::normalize(1, 2), Rat(2), std::nullopt}};
}

namespace {

/// Accumulates one named check; keeps only the first counterexample.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    if (ok || !result_.passed) return;
    result_.passed = false;
    result_.counterexample = std::forward<Describe>(describe)();
  }

  bool failed() const { return !result_.passed; }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string at(std::uint32_t i, std::uint32_t n) {
  return "i=" + std::to_string(i) + " n=" + std::to_string(n);
}

void recurrence_checks(const WeightConfig& w, std::uint32_t n_max, const std::string& tag,
                       std::vector<CheckResult>& out) {
  // One extra column so the residual at the top diagonal reads real entries.
  const WalkTable big = build_table(w, n_max + 1);

  Check residual(tag + ": recurrence residual is zero");
  Check base(tag + ": base cases A(0,0)=1, A(i,0)=0");
  Check parity(tag + ": parity vanishing");
  base.expect(big.at(0, 0) == Rat(1), [] { return std::string("A(0,0) != 1"); });
  for (std::uint32_t i = 1; i <= n_max + 1; ++i) {
    base.expect(big.at(i, 0).is_zero(), [&] { return "A(" + std::to_string(i) + ",0) != 0"; });
  }
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    for (std::uint32_t i = 0; i <= n + 1; ++i) {
      Rat expected = i == 0 ? w.c3 * big.at(1, n - 1)
                            : w.c1 * big.at(i - 1, n - 1) + w.c2 * big.at(i + 1, n - 1);
      residual.expect(big.at(i, n) == expected, [&] {
        return at(i, n) + ": table=" + big.at(i, n).to_string() + " recurrence=" +
               expected.to_string();
      });
    }
  }
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    for (std::uint32_t i = 0; i <= n_max; ++i) {
      if (i <= n && (n - i) % 2 == 0) continue;
      parity.expect(big.at(i, n).is_zero(),
                    [&] { return at(i, n) + ": " + big.at(i, n).to_string() + " != 0"; });
    }
  }
  out.push_back(base.take());
  out.push_back(residual.take());
  out.push_back(parity.take());
}

void series_identity_checks(const WeightConfig& w, std::uint32_t n_max, const std::string& tag,
                            std::vector<CheckResult>& out) {
  const std::size_t order = n_max;
  const PowerSeries a = gf_a(w, order);
  const PowerSeries t2 = PowerSeries::monomial(w.c1 * w.c2, 2, order);
  const PowerSeries one = PowerSeries::constant(Rat(1), order);

  Check quad(tag + ": quadratic residual (c1c2 t^2) a^2 - a + 1 = 0");
  const PowerSeries q = t2 * a * a - a + one;
  for (std::size_t k = 0; k <= order; ++k) {
    quad.expect(q[k].is_zero(),
                [&] { return "coefficient t^" + std::to_string(k) + " = " + q[k].to_string(); });
  }
  out.push_back(quad.take());

  Check root(tag + ": sqrt(1 - 4 c1c2 t^2)^2 reproduces the radicand");
  const PowerSeries radicand = one - PowerSeries::monomial(Rat(4) * w.c1 * w.c2, 2, order);
  const PowerSeries s = ps_sqrt(radicand);
  root.expect(ps_mul(s, s) == radicand,
              [&] { return "square = " + ps_mul(s, s).to_string(); });
  out.push_back(root.take());

  if (w.c2.is_zero()) return;

  Check system(tag + ": a = 1/(1 - b) and b = c1c2 t^2 a");
  const auto [b, c] = gf_b_c(w, order);
  system.expect(ps_inv(one - b) == a, [&] { return "1/(1-b) = " + ps_inv(one - b).to_string(); });
  system.expect(t2 * a == b, [&] { return "c1c2 t^2 a = " + (t2 * a).to_string(); });
  out.push_back(system.take());

  Check product(tag + ": d_i = d * (c1 t a)^i");
  const PowerSeries d = gf_d_i(w, 0, order);
  const PowerSeries step = ps_shift_mul(a, 1) * w.c1;
  for (std::uint32_t i = 0; i <= n_max && !product.failed(); ++i) {
    const PowerSeries lhs = gf_d_i(w, i, order);
    const PowerSeries rhs = ps_mul(d, ps_pow(step, i));
    product.expect(lhs == rhs, [&] {
      return "i=" + std::to_string(i) + ": " + lhs.to_string() + " vs " + rhs.to_string();
    });
  }
  out.push_back(product.take());
}

void dp_vs_gf(const WeightConfig& w, const WalkTable& table, std::uint32_t n_max,
              const std::string& tag, std::vector<CheckResult>& out) {
  Check eq(tag + ": dp == gf");
  for (std::uint32_t i = 0; i <= n_max; ++i) {
    const PowerSeries s = gf_d_i(w, i, n_max);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      eq.expect(s[n] == table.at(i, n), [&] {
        return at(i, n) + ": dp=" + table.at(i, n).to_string() + " gf=" + s[n].to_string();
      });
    }
  }
  out.push_back(eq.take());
}

void tree_scope(const VerifyOptions& opts, std::vector<CheckResult>& out) {
  for (std::uint32_t m = 2; m <= opts.m_max; ++m) {
    const std::string tag = "tree m=" + std::to_string(m);
    const WeightConfig w = tree_weights(m);
    const WalkTable table = build_table(w, opts.n_max);

    recurrence_checks(w, opts.n_max, tag, out);

    Check integral(tag + ": entries are natural numbers");
    Check mass(tag + ": mass conservation sum V(i) A(i,n) = m^n");
    for (std::uint32_t n = 0; n <= opts.n_max; ++n) {
      for (std::uint32_t i = 0; i <= n; ++i) {
        const Rat& v = table.at(i, n);
        integral.expect(v.is_integer() && v.sign() >= 0,
                        [&] { return at(i, n) + ": " + v.to_string(); });
      }
      const Rat total = mass_check(m, n, table);
      const Rat expected = pow(Rat(static_cast<std::int64_t>(m)), n);
      mass.expect(total == expected, [&] {
        return "n=" + std::to_string(n) + ": " + total.to_string() + " != " + expected.to_string();
      });
    }
    out.push_back(integral.take());
    out.push_back(mass.take());

    dp_vs_gf(w, table, opts.n_max, tag, out);

    Check closed(tag + ": gf_f == closed form");
    for (std::uint32_t i = 0; i <= opts.n_max; ++i) {
      const PowerSeries lhs = gf_f(m, i, opts.n_max);
      const PowerSeries rhs = gf_f_closed_form(m, i, opts.n_max);
      closed.expect(lhs == rhs, [&] {
        return "i=" + std::to_string(i) + ": " + lhs.to_string() + " vs " + rhs.to_string();
      });
    }
    out.push_back(closed.take());

    Check tree(tag + ": dp == tree oracle");
    for (std::uint32_t n = 0; n <= opts.n_max; ++n) {
      for (std::uint32_t i = 0; i <= n; ++i) {
        const Nat count = tree_walk_count(m, i, n, opts.max_states);
        tree.expect(Rat(count) == table.at(i, n), [&] {
          return at(i, n) + ": dp=" + table.at(i, n).to_string() + " tree=" + count.to_string();
        });
      }
    }
    out.push_back(tree.take());

    series_identity_checks(w, opts.n_max, tag, out);
  }
}

void dyck_scope(const VerifyOptions& opts, std::vector<CheckResult>& out) {
  for (const WeightConfig& w : verification_weights()) {
    const std::string tag = "dyck " + w.to_string();
    const WalkTable table = build_table(w, opts.n_max);

    recurrence_checks(w, opts.n_max, tag, out);
    dp_vs_gf(w, table, opts.n_max, tag, out);

    Check en(tag + ": dp == exhaustive enumeration");
    for (std::uint32_t n = 0; n <= opts.n_max; ++n) {
      for (std::uint32_t i = 0; i <= n; ++i) {
        const Rat e = enumerate_dyck(w, i, n, opts.max_states);
        en.expect(e == table.at(i, n), [&] {
          return at(i, n) + ": dp=" + table.at(i, n).to_string() + " enum=" + e.to_string();
        });
      }
    }
    out.push_back(en.take());

    // Every axis-ending path up to n_max, built from its step mask.
    Check factor(tag + ": poids = weight * (c3/c2)^#components");
    const Rat ratio = w.c3 / w.c2;
    for (std::uint32_t n = 0; n <= opts.n_max; n += 2) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Step> steps;
        std::int64_t h = 0;
        for (std::uint32_t k = 0; k < n && h >= 0; ++k) {
          const bool up = (mask >> k) & 1U;
          h += up ? 1 : -1;
          steps.push_back(up ? Step::U : Step::D);
        }
        if (h != 0 || steps.size() != n) continue;
        const LatticePath p(std::move(steps));
        const auto [weight, poids] = path_weight_poids(p, w);
        const auto parts = decompose_irreducible(p);
        const Rat succinct = weight * pow(ratio, static_cast<unsigned long>(parts.size()));
        factor.expect(poids == succinct, [&] {
          return p.to_string() + ": poids=" + poids.to_string() + " succinct=" + succinct.to_string();
        });
      }
    }
    out.push_back(factor.take());

    series_identity_checks(w, opts.n_max, tag, out);
  }
}

/// Two distinct reduced words of length len over g generators (one when len = 0).
std::vector<GroupWord> sample_words(std::uint32_t g, std::uint32_t len) {
  if (len == 0) return {GroupWord{}};
  std::vector<std::int32_t> first(len, 1);
  std::vector<std::int32_t> second(len);
  for (std::uint32_t k = 0; k < len; ++k) {
    second[k] = g >= 2 ? (k % 2 == 0 ? 2 : -1) : -1;
  }
  return {GroupWord(std::move(first)), GroupWord(std::move(second))};
}

void freegroup_scope(const VerifyOptions& opts, std::vector<CheckResult>& out) {
  const std::uint32_t g_max = std::max<std::uint32_t>(1, opts.m_max / 2);
  for (std::uint32_t g = 1; g <= g_max; ++g) {
    const std::uint32_t m = 2 * g;
    const WalkTable table = build_table(tree_weights(m), opts.n_max);
    Check fg("free group g=" + std::to_string(g) + ": word counts == A_" + std::to_string(m) +
             "(i,n)");
    for (std::uint32_t n = 0; n <= opts.n_max; ++n) {
      for (std::uint32_t i = 0; i <= n; ++i) {
        for (const GroupWord& word : sample_words(g, i)) {
          const Nat c = free_group_count(g, word, n, opts.max_states);
          fg.expect(Rat(c) == table.at(i, n), [&] {
            return "word '" + word.to_string() + "' n=" + std::to_string(n) +
                   ": count=" + c.to_string() + " dp=" + table.at(i, n).to_string();
          });
        }
      }
    }
    out.push_back(fg.take());
  }
}

void preflight(const VerifyOptions& opts) {
  const bool tree = opts.scope == VerifyScope::tree || opts.scope == VerifyScope::all;
  const bool dyck = opts.scope == VerifyScope::dyck || opts.scope == VerifyScope::all;
  const bool fg = opts.scope == VerifyScope::freegroup || opts.scope == VerifyScope::all;
  const Nat cap(opts.max_states);
  auto refuse = [&](const std::string& what, const Nat& need) {
    throw error(errc::feasibility, what + " needs " + need.to_string() +
                                       " states, above the ceiling of " +
                                       std::to_string(opts.max_states));
  };
  if (tree && opts.m_max >= 2) {
    const Nat need = TruncatedTree::vertex_count(opts.m_max, opts.n_max);
    if (need > cap) refuse("tree oracle", need);
  }
  if (dyck) {
    const Nat need = pow(Nat(2), opts.n_max);
    if (need > cap) refuse("Dyck enumeration", need);
  }
  if (fg) {
    const std::uint32_t g_max = std::max<std::uint32_t>(1, opts.m_max / 2);
    const Nat need = pow(Nat(2 * std::uint64_t{g_max}), opts.n_max);
    if (need > cap) refuse("free group enumeration", need);
  }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  preflight(opts);
  std::vector<CheckResult> out;
  const bool all = opts.scope == VerifyScope::all;
  if (all || opts.scope == VerifyScope::tree) tree_scope(opts, out);
  if (all || opts.scope == VerifyScope::dyck) dyck_scope(opts, out);
  if (all || opts.scope == VerifyScope::freegroup) freegroup_scope(opts, out);
  return out;
}

}  // namespace treewalk
