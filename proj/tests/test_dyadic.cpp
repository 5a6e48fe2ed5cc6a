#include <doctest.h>

#include <random>

#include "cusick/dyadic.hpp"

using cusick::Dyadic;

namespace {

Dyadic random_dyadic(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<std::int64_t> exp(0, 80);
  return Dyadic::from_parts(mpz_class(num(rng)), exp(rng));
}

}  // namespace

TEST_CASE("addition examples") {
  CHECK(Dyadic(1).halve() + Dyadic(1).scale_pow2(-2) == Dyadic::parse("3/2^2"));
  const Dyadic x = Dyadic::parse("5/2^7");
  CHECK(x + Dyadic() == x);
  const Dyadic sum = Dyadic::parse("1/2^3") + Dyadic::parse("7/2^3");
  CHECK(sum == Dyadic(1));
  CHECK(sum.exponent() == 0);
}

TEST_CASE("halve, scale and compare examples") {
  CHECK(Dyadic(1).halve() == Dyadic::parse("1/2^1"));
  CHECK(Dyadic::parse("3/2^2").scale_pow2(-2) == Dyadic::parse("3/2^4"));
  CHECK(Dyadic::parse("3/2^2").scale_pow2(3) == Dyadic(6));
  CHECK(Dyadic::parse("11/2^4") < Dyadic::parse("3/2^2"));
  CHECK(cusick::compare(Dyadic::parse("11/2^4"), Dyadic::parse("3/2^2")) ==
        std::strong_ordering::less);
}

TEST_CASE("normalization") {
  const Dyadic a = Dyadic::from_parts(mpz_class(12), 4);
  CHECK(a.numerator() == 3);
  CHECK(a.exponent() == 2);
  const Dyadic z = Dyadic::from_parts(mpz_class(0), 9);
  CHECK(z.exponent() == 0);
  CHECK(z.is_zero());
  CHECK(Dyadic::from_parts(mpz_class(3), -2) == Dyadic(12));
  CHECK(Dyadic::parse("6/2^3").to_string() == "3/2^2");
}

TEST_CASE("text form") {
  CHECK(Dyadic().to_string() == "0");
  CHECK(Dyadic(3).to_string() == "3");
  CHECK(Dyadic(-1).halve().to_string() == "-1/2^1");
  CHECK(Dyadic::parse("-7") == Dyadic(-7));
  CHECK_THROWS_AS(Dyadic::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Dyadic::parse("3/4"), std::invalid_argument);
  CHECK_THROWS_AS(Dyadic::parse("3/2^"), std::invalid_argument);
  CHECK_THROWS_AS(Dyadic::parse("3/2^-1"), std::invalid_argument);
  CHECK_THROWS_AS(Dyadic::parse("x/2^1"), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(Dyadic::parse("11/2^4").to_decimal(12) == "0.687500000000");
  CHECK(Dyadic::parse("1/2^3").to_decimal(2) == "0.13");
  CHECK(Dyadic::parse("-1/2^3").to_decimal(2) == "-0.13");
  CHECK(Dyadic::parse("1/2^1").to_decimal(0) == "1");
  CHECK(Dyadic::parse("-1/2^1").to_decimal(0) == "-1");
  CHECK(Dyadic::parse("1/2^10").to_decimal(2) == "0.00");
  CHECK(Dyadic::parse("-1/2^10").to_decimal(2) == "0.00");
  CHECK(Dyadic(5).to_decimal(3) == "5.000");
  CHECK(Dyadic::parse("3/2^2").to_decimal(1) == "0.8");
}

TEST_CASE("doubles convert exactly") {
  CHECK(Dyadic::from_double(0.75) == Dyadic::parse("3/2^2"));
  CHECK(Dyadic::from_double(-6.0) == Dyadic(-6));
  CHECK(Dyadic::from_double(0.0).is_zero());
  const double x = 0.6;
  CHECK(Dyadic::from_double(x).to_double() == x);
  CHECK(Dyadic::from_double(0.1) != Dyadic::parse("1/2^3"));
  CHECK(Dyadic::one_minus_pow2(2) == Dyadic::parse("3/2^2"));
}

TEST_CASE("algebraic properties on random values") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 2000; ++i) {
    const Dyadic a = random_dyadic(rng);
    const Dyadic b = random_dyadic(rng);
    const Dyadic c = random_dyadic(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    const Dyadic s = a + b;
    CHECK((s.is_zero() ? s.exponent() == 0 : (s.exponent() == 0 || mpz_odd_p(s.numerator().get_mpz_t()))));
    CHECK(Dyadic::parse(a.to_string()) == a);
    const std::int64_t k = static_cast<std::int64_t>(rng() % 200) - 100;
    CHECK(a.scale_pow2(k).scale_pow2(-k) == a);
    // compare against cross-multiplied integers
    const mpz_class lhs = a.numerator() << static_cast<mp_bitcnt_t>(b.exponent());
    const mpz_class rhs = b.numerator() << static_cast<mp_bitcnt_t>(a.exponent());
    CHECK((a < b) == (lhs < rhs));
    CHECK((a == b) == (lhs == rhs));
    CHECK(a - a == Dyadic());
    CHECK((a * b) == (b * a));
  }
}
