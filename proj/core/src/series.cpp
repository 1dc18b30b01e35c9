#include "treewalk/series.hpp"

#include <algorithm>
#include <utility>

namespace treewalk {

PowerSeries::PowerSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw error(errc::validation, "a power series needs at least the constant coefficient");
  }
}

PowerSeries PowerSeries::constant(const Rat& c, std::size_t order) {
  PowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::monomial(const Rat& c, std::size_t k, std::size_t order) {
  PowerSeries s(order);
  if (k <= order) s.coeffs_[k] = c;
  return s;
}

const Rat& PowerSeries::coeff(std::size_t k) const {
  if (k > order()) {
    throw error(errc::out_of_range, "coefficient t^" + std::to_string(k) +
                                        " beyond truncation order " + std::to_string(order()));
  }
  return coeffs_[k];
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw error(errc::out_of_range, "cannot raise truncation order from " +
                                        std::to_string(this->order()) + " to " +
                                        std::to_string(order));
  }
  return PowerSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rat& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
  return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + n, b.coeffs_.begin());
}

std::string PowerSeries::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rat& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string mag = (c.sign() < 0 ? -c : c).to_string();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag + "*";
    out += k == 1 ? std::string("t") : "t^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out + " + O(t^" + std::to_string(order() + 1) + ")";
}

PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<Rat> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (!g[j].is_zero()) out[i + j].add_product(f[i], g[j]);
    }
  }
  return PowerSeries(std::move(out));
}

PowerSeries ps_pow(const PowerSeries& f, unsigned e) {
  PowerSeries result = PowerSeries::constant(Rat(1), f.order());
  PowerSeries base = f;
  while (e != 0) {
    if (e & 1U) result = ps_mul(result, base);
    e >>= 1U;
    if (e != 0) base = ps_mul(base, base);
  }
  return result;
}

PowerSeries ps_inv(const PowerSeries& f) {
  if (f[0].is_zero()) {
    throw error(errc::not_invertible, "series with zero constant term has no inverse");
  }
  const std::size_t order = f.order();
  const Rat inv0 = Rat(1) / f[0];
  std::vector<Rat> g(order + 1);
  g[0] = inv0;
  // f_0 g_k = -sum_{j=1..k} f_j g_{k-j}
  for (std::size_t k = 1; k <= order; ++k) {
    Rat acc{0};
    for (std::size_t j = 1; j <= k; ++j) {
      if (!f[j].is_zero()) acc.add_product(f[j], g[k - j]);
    }
    g[k] = -(acc * inv0);
  }
  return PowerSeries(std::move(g));
}

PowerSeries ps_sqrt(const PowerSeries& f) {
  if (f[0] != Rat(1)) {
    throw error(errc::unsupported_radicand,
                "square root needs constant term exactly 1, got " + f[0].to_string());
  }
  const std::size_t order = f.order();
  std::vector<Rat> s(order + 1);
  s[0] = Rat(1);
  const Rat half = Rat::normalize(1, 2);
  // 2 s_0 s_k = f_k - sum_{j=1..k-1} s_j s_{k-j}; the sum is symmetric in j.
  for (std::size_t k = 1; k <= order; ++k) {
    Rat cross{0};
    for (std::size_t j = 1; 2 * j < k; ++j) cross.add_product(s[j], s[k - j]);
    cross += cross;
    if (k % 2 == 0) cross.add_product(s[k / 2], s[k / 2]);
    s[k] = (f[k] - cross) * half;
  }
  return PowerSeries(std::move(s));
}

PowerSeries ps_shift_div(const PowerSeries& f, std::size_t k) {
  if (k > f.order()) {
    throw error(errc::not_divisible, "cannot divide a series of order " +
                                         std::to_string(f.order()) + " by t^" + std::to_string(k));
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (!f[j].is_zero()) {
      throw error(errc::not_divisible, "coefficient of t^" + std::to_string(j) + " is " +
                                           f[j].to_string() + ", cannot divide by t^" +
                                           std::to_string(k));
    }
  }
  auto c = f.coeffs();
  return PowerSeries(std::vector<Rat>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

PowerSeries ps_shift_mul(const PowerSeries& f, std::size_t k) {
  std::vector<Rat> out(f.order() + 1);
  for (std::size_t j = 0; j + k <= f.order(); ++j) out[j + k] = f[j];
  return PowerSeries(std::move(out));
}

namespace {

/// 1 - 4 p t^2 at the given order.
PowerSeries dyck_radicand(const Rat& p, std::size_t order) {
  PowerSeries r = PowerSeries::constant(Rat(1), order);
  return r - PowerSeries::monomial(Rat(4) * p, 2, order);
}

void require_c2(const WeightConfig& w, const char* what) {
  if (w.c2.is_zero()) {
    throw error(errc::degenerate_weights,
                std::string(what) + " is undefined for c2 = 0 (weights " + w.to_string() + ")");
  }
}

void require_tree_degree(std::uint32_t m) {
  if (m < 2) {
    throw error(errc::invalid_degree,
                "closed form needs m >= 2: its denominator 2(m-1) vanishes at t = 0 for m = " +
                    std::to_string(m));
  }
}

}  // namespace

PowerSeries gf_a(const WeightConfig& w, std::size_t order) {
  const Rat p = w.c1 * w.c2;
  if (p.is_zero()) return PowerSeries::constant(Rat(1), order);
  const PowerSeries root = ps_sqrt(dyck_radicand(p, order + 2));
  PowerSeries a = ps_shift_div(PowerSeries::constant(Rat(1), order + 2) - root, 2);
  return a * (Rat(1) / (Rat(2) * p));
}

IrreducibleEnumerators gf_b_c(const WeightConfig& w, std::size_t order) {
  require_c2(w, "the poids enumerator c(t)");
  const PowerSeries root = ps_sqrt(dyck_radicand(w.c1 * w.c2, order));
  PowerSeries b = (PowerSeries::constant(Rat(1), order) - root) * Rat::normalize(1, 2);
  PowerSeries c = b * (w.c3 / w.c2);
  return {std::move(b), std::move(c)};
}

PowerSeries gf_d_i(const WeightConfig& w, std::uint32_t i, std::size_t order) {
  require_c2(w, "d_i(t)");
  const auto [b, c] = gf_b_c(w, order);
  const PowerSeries d = ps_inv(PowerSeries::constant(Rat(1), order) - c);
  if (i == 0) return d;
  if (i > order) return PowerSeries(order);

  // (c1 a)^i only needs order - i terms; the t^i prefactor is a final shift.
  const std::size_t inner = order - i;
  const PowerSeries factor = ps_pow(gf_a(w, inner), i) * pow(w.c1, i);
  std::vector<Rat> shifted(order + 1);
  for (std::size_t k = 0; k <= inner; ++k) shifted[k + i] = factor[k];
  return ps_mul(d, PowerSeries(std::move(shifted)));
}

PowerSeries gf_f(std::uint32_t m, std::uint32_t i, std::size_t order) {
  require_tree_degree(m);
  return gf_d_i(tree_weights(m), i, order);
}

PowerSeries gf_f_closed_form(std::uint32_t m, std::uint32_t i, std::size_t order) {
  require_tree_degree(m);
  const Rat mm{static_cast<std::int64_t>(m)};
  const Rat q = mm - Rat(1);
  const PowerSeries root = ps_sqrt(dyck_radicand(q, order + 1));

  PowerSeries denom = PowerSeries::constant(mm - Rat(2), order) + root.truncated(order) * mm;
  const PowerSeries head = ps_inv(denom) * (Rat(2) * q);

  PowerSeries tail = ps_shift_div(PowerSeries::constant(Rat(1), order + 1) - root, 1);
  tail *= Rat(1) / (Rat(2) * q);
  return ps_mul(head, ps_pow(tail, i));
}

}  // namespace treewalk
