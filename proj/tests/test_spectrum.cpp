#include <doctest.h>

#include <random>

#include "cusick/spectrum.hpp"

using cusick::BitWord;
using cusick::Dyadic;
using cusick::Spectrum;

namespace {

Dyadic d(const char* text) { return Dyadic::parse(text); }

BitWord random_word(std::mt19937_64& rng, std::size_t bits) {
  mpz_class v;
  for (std::size_t j = 0; j + 1 < bits; ++j) {
    if (rng() & 1) mpz_setbit(v.get_mpz_t(), j);
  }
  mpz_setbit(v.get_mpz_t(), bits - 1);
  return BitWord(v);
}

}  // namespace

TEST_CASE("phi examples") {
  CHECK(cusick::phi(BitWord(1)).entries() == Spectrum::Map{{0, Dyadic(1)}});
  CHECK(cusick::phi(BitWord(2)).entries() == Spectrum::Map{{0, Dyadic(1)}});
  CHECK(cusick::phi(BitWord(3)).entries() ==
        Spectrum::Map{{-1, Dyadic(1).halve()}, {1, Dyadic(1).halve()}});
  CHECK_THROWS_AS(cusick::phi(BitWord(0)), std::domain_error);
}

TEST_CASE("phi(., 149) against frozen values") {
  // frozen from an independent rational-arithmetic recursion
  const Spectrum::Map expected = {
      {-5, d("1/2^5")}, {-4, d("1/2^5")}, {-3, d("9/2^7")}, {-2, d("1/2^3")}, {-1, d("17/2^7")},
      {0, d("11/2^6")}, {1, d("1/2^3")},  {2, d("3/2^4")},  {3, d("1/2^3")}};
  const Spectrum s = cusick::phi(BitWord(149));
  CHECK(s.entries() == expected);
  CHECK(s.t() == BitWord(149));
}

TEST_CASE("phi_naive examples") {
  CHECK(cusick::phi_naive(BitWord(1), 0) == Dyadic(1));
  CHECK(cusick::phi_naive(BitWord(3), 1) == Dyadic(1).halve());
  CHECK(cusick::phi_naive(BitWord(3), 2).is_zero());
  CHECK_THROWS_AS(cusick::phi_naive(BitWord(0), 0), std::domain_error);
  CHECK_THROWS_AS(cusick::phi_naive(BitWord::pow2(24), 0), std::invalid_argument);
}

TEST_CASE("argmax_set examples") {
  CHECK(cusick::argmax_set(cusick::phi(BitWord(1))) == std::vector<std::int64_t>{0});
  CHECK(cusick::argmax_set(cusick::phi(BitWord(3))) == std::vector<std::int64_t>{-1, 1});
  const Spectrum s = cusick::phi(BitWord(149));
  const auto top = cusick::argmax_set(s);
  CHECK(std::find(top.begin(), top.end(), 2) != top.end());
  for (std::int64_t k : {-1, 0, 1}) CHECK(s.at(2) > s.at(k));
}

TEST_CASE("phi agrees with the naive recursion for t < 2^12") {
  for (std::uint64_t t = 1; t < (1u << 12); ++t) {
    const Spectrum s = cusick::phi(BitWord(t));
    const auto nu = static_cast<std::int64_t>(BitWord(t).bit_length()) - 1;
    for (std::int64_t k = -nu - 1; k <= nu + 1; ++k) {
      REQUIRE(s.at(k) == cusick::phi_naive(BitWord(t), k));
    }
  }
}

TEST_CASE("SpectrumPair tracks (phi(u), phi(u+1))") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const BitWord t = random_word(rng, 2 + rng() % 40);
    cusick::SpectrumPair pair;
    for (std::size_t j = t.bit_length() - 1; j-- > 0;) {
      pair.push_digit(t.bit(j));
      if (pair.u().bit_length() <= 12) {
        CHECK(pair.lo() == cusick::phi(pair.u()));
        CHECK(pair.hi() == cusick::phi(pair.u().plus(1)));
      }
    }
    CHECK(pair.u() == t);
    CHECK(pair.lo() == cusick::phi(t));
    CHECK(pair.hi() == cusick::phi(t.plus(1)));
  }
}

TEST_CASE("structural identities for small t") {
  for (std::uint64_t t = 1; t < (1u << 11); ++t) {
    const BitWord w(t);
    const Spectrum s = cusick::phi(w);
    CHECK(s.total_mass() == Dyadic(1));
    CHECK(cusick::phi(cusick::reflect(w)) == s.mirrored());
    CHECK(cusick::phi(w.doubled()) == s);
    const auto nu = static_cast<std::int64_t>(w.bit_length()) - 1;
    CHECK(s.min_k() >= -nu);
    CHECK(s.max_k() <= nu);
    if (t >= 2 && t % 2 == 1) {
      const Spectrum lo = cusick::phi(BitWord(t / 2));
      const Spectrum hi = cusick::phi(BitWord(t / 2 + 1));
      for (std::int64_t k = -nu - 1; k <= nu + 1; ++k) {
        CHECK(s.at(k) == (lo.at(k - 1) + hi.at(k + 1)).halve());
      }
    }
  }
}

TEST_CASE("big-integer path matches the machine-word path") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const BitWord t = random_word(rng, 30 + rng() % 30);
    const Spectrum small = cusick::phi(t);
    // appended zero digits force the wide path without changing phi
    const BitWord wide(t.value() << 40);
    REQUIRE(wide.bit_length() > 62);
    CHECK(cusick::phi(wide) == small);
  }
  for (int i = 0; i < 10; ++i) {
    const BitWord t = random_word(rng, 100 + rng() % 200);
    const Spectrum s = cusick::phi(t);
    CHECK(s.total_mass() == Dyadic(1));
    CHECK(cusick::phi(cusick::reflect(t)) == s.mirrored());
    const auto nu = static_cast<std::int64_t>(t.bit_length()) - 1;
    CHECK(s.min_k() >= -nu);
    CHECK(s.max_k() <= nu);
  }
}
