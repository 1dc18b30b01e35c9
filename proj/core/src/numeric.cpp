#include "treewalk/numeric.hpp"

#include <utility>

namespace treewalk {

std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::division_by_zero: return "division by zero";
    case errc::parse: return "parse error";
    case errc::invalid_degree: return "invalid degree";
    case errc::out_of_range: return "out of range";
    case errc::not_invertible: return "not invertible";
    case errc::unsupported_radicand: return "unsupported radicand";
    case errc::not_divisible: return "not divisible";
    case errc::degenerate_weights: return "degenerate weights";
    case errc::invalid_path: return "invalid path";
    case errc::decomposition_domain: return "decomposition domain";
    case errc::validation: return "validation error";
    case errc::usage: return "usage error";
    case errc::feasibility: return "feasibility guard";
  }
  return "unknown error";
}

namespace {

bool is_decimal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, bool allow_sign, std::string_view whole) {
  if (!is_decimal(s, allow_sign)) {
    throw error(errc::parse, "not a decimal number: '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Nat::Nat(std::uint64_t v) {
  // mpz_class has no unsigned long long constructor on every platform.
  static_assert(sizeof(unsigned long) >= sizeof(std::uint64_t));
  value_ = static_cast<unsigned long>(v);
}

Nat::Nat(Integer v) : value_(std::move(v)) {
  if (sgn(value_) < 0) {
    throw error(errc::validation, "negative value for Nat: " + value_.get_str());
  }
}

Nat Nat::parse(std::string_view text) { return Nat(parse_integer(text, false, text)); }

std::uint64_t Nat::to_u64() const {
  if (!value_.fits_ulong_p()) {
    throw error(errc::out_of_range, "value does not fit in 64 bits: " + to_string());
  }
  return value_.get_ui();
}

Nat pow(const Nat& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.value().get_mpz_t(), exponent);
  return Nat(std::move(r));
}

Rat::Rat(std::int64_t v) {
  static_assert(sizeof(long) >= sizeof(std::int64_t));
  value_ = static_cast<long>(v);
}

Rat Rat::normalize(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw error(errc::division_by_zero, "rational with zero denominator");
  }
  Rat r;
  r.value_ = mpq_class(num, den);
  r.value_.canonicalize();
  return r;
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_integer(text, true, text));
  }
  Integer num = parse_integer(text.substr(0, slash), true, text);
  Integer den = parse_integer(text.substr(slash + 1), true, text);
  return normalize(num, den);
}

Integer Rat::to_integer() const {
  if (!is_integer()) {
    throw error(errc::validation, "not an integer: " + to_string());
  }
  return value_.get_num();
}

std::string Rat::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) {
    throw error(errc::division_by_zero, "division by zero rational");
  }
  value_ /= rhs.value_;
  return *this;
}

void Rat::add_product(const Rat& a, const Rat& b) { value_ += a.value_ * b.value_; }

Rat pow(const Rat& base, unsigned long exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), exponent);
  return Rat::normalize(num, den);
}

std::ostream& operator<<(std::ostream& os, const Nat& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.to_string(); }

}  // namespace treewalk
