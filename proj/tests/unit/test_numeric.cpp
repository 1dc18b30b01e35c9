#include <doctest.h>

#include <random>

#include "random_weights.hpp"
#include "treewalk/numeric.hpp"

using namespace treewalk;

TEST_CASE("rat_normalize canonical form") {
  CHECK(Rat::normalize(4, -6).to_string() == "-2/3");
  CHECK(Rat::normalize(4, -6).den() == 3);
  CHECK(Rat::normalize(0, 5).to_string() == "0");
  CHECK(Rat::normalize(0, 5).den() == 1);
  CHECK(Rat::normalize(7, 1).to_string() == "7");
  CHECK(Rat::normalize(-3, -9) == Rat::normalize(1, 3));
}

TEST_CASE("rat_normalize rejects zero denominator") {
  try {
    (void)Rat::normalize(1, 0);
    FAIL("expected an error");
  } catch (const error& e) {
    CHECK(e.code() == errc::division_by_zero);
  }
}

TEST_CASE("rat arithmetic") {
  const Rat half = Rat::normalize(1, 2);
  const Rat third = Rat::normalize(1, 3);
  CHECK(half + third == Rat::normalize(5, 6));
  CHECK(half - third == Rat::normalize(1, 6));
  CHECK(Rat::normalize(2, 3) * Rat::normalize(3, 2) == Rat(1));
  CHECK((Rat::normalize(2, 3) * Rat::normalize(3, 2)).to_string() == "1");
  CHECK(half / third == Rat::normalize(3, 2));
  CHECK_THROWS_AS((void)(Rat(1) / Rat(0)), error);
  Rat acc = Rat(1);
  acc.add_product(half, third);
  CHECK(acc == Rat::normalize(7, 6));
  CHECK(pow(Rat::normalize(-2, 3), 3) == Rat::normalize(-8, 27));
  CHECK(pow(Rat(5), 0) == Rat(1));
}

TEST_CASE("parsing and printing") {
  CHECK(Rat::parse("12") == Rat(12));
  CHECK(Rat::parse("-12") == Rat(-12));
  CHECK(Rat::parse("+3/6") == Rat::normalize(1, 2));
  CHECK(Rat::parse("6/-4").to_string() == "-3/2");
  CHECK(Rat::parse("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS((void)Rat::parse(""), error);
  CHECK_THROWS_AS((void)Rat::parse("1.5"), error);
  CHECK_THROWS_AS((void)Rat::parse("1/"), error);
  CHECK_THROWS_AS((void)Rat::parse("a/2"), error);
  CHECK_THROWS_AS((void)Rat::parse("2/0"), error);

  CHECK(Nat::parse("0").is_zero());
  CHECK_THROWS_AS((void)Nat::parse("-1"), error);
  CHECK_THROWS_AS((void)Nat(Integer(-4)), error);
}

TEST_CASE("integer round trip and big values") {
  for (std::int64_t n : {0L, 1L, -1L, 42L, -9000000000000000000L}) {
    const Rat r(n);
    CHECK(r.is_integer());
    CHECK(r.to_integer() == Integer(static_cast<long>(n)));
  }
  CHECK_THROWS_AS((void)Rat::normalize(1, 2).to_integer(), error);

  // 3^80 overflows every machine integer.
  const Nat big = pow(Nat(3), 80);
  CHECK(big.to_string() == "147808829414345923316083210206383297601");
  CHECK_THROWS_AS((void)big.to_u64(), error);
  CHECK(Nat(17).to_u64() == 17);
  CHECK(Nat(2) + Nat(3) == Nat(5));
  CHECK(Nat(2) * Nat(3) == Nat(6));
  CHECK(Nat(2) < Nat(3));
}

TEST_CASE("field laws hold exactly on random rationals") {
  std::mt19937_64 rng(20090312);
  for (int trial = 0; trial < 500; ++trial) {
    const Rat a = testing::random_rat(rng, 50, 40);
    const Rat b = testing::random_rat(rng, 50, 40);
    const Rat c = testing::random_rat(rng, 50, 40);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // Normalizing an already-canonical value is the identity.
    const Rat again = Rat::normalize(a.num(), a.den());
    CHECK(again == a);
    CHECK(again.num() == a.num());
    CHECK(again.den() == a.den());
    CHECK(a.den() > 0);
    CHECK(gcd(abs(a.num()), a.den()) == 1);
    CHECK(Rat::parse(a.to_string()) == a);
  }
}
