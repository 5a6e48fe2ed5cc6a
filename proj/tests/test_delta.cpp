#include <doctest.h>

#include <cmath>

#include "cusick/delta.hpp"
#include "cusick/oracle.hpp"

using cusick::BitWord;
using cusick::Dyadic;
using cusick::TailedDistribution;

namespace {

Dyadic d(const char* text) { return Dyadic::parse(text); }

}  // namespace

TEST_CASE("delta base case") {
  const TailedDistribution base = cusick::delta_dist(BitWord(1));
  CHECK(base.at(1) == d("1/2^1"));
  CHECK(base.at(0) == d("1/2^2"));
  CHECK(base.at(-1) == d("1/2^3"));
  CHECK(base.at(2).is_zero());
  CHECK(base.at(-10) == Dyadic(1).scale_pow2(-12));
  CHECK(base == TailedDistribution::base());
  CHECK(cusick::delta_dist(BitWord(2)) == base);
  CHECK_THROWS_AS(cusick::delta_dist(BitWord(0)), std::domain_error);
}

TEST_CASE("delta(., 3)") {
  const TailedDistribution t3 = cusick::delta_dist(BitWord(3));
  CHECK(t3.at(2) == d("1/2^2"));
  CHECK(t3.at(1) == d("1/2^3"));
  CHECK(t3.at(0) == d("5/2^4"));
  CHECK(t3.at(-1) == d("5/2^5"));
  CHECK(t3.at(3).is_zero());
  // canonical form: the geometric law starts right at k = 0
  CHECK(t3.tail_start() == 0);
  CHECK(t3.tail_value() == d("5/2^4"));
  CHECK(t3.window().size() == 2);
  CHECK(t3.total_mass() == Dyadic(1));
}

TEST_CASE("delta_from_phi examples") {
  CHECK(cusick::delta_from_phi(BitWord(1), 1) == d("1/2^1"));
  CHECK(cusick::delta_from_phi(BitWord(3), 2) == d("1/2^2"));
  const cusick::Spectrum s = cusick::phi(BitWord(149));
  for (std::int64_t k = s.min_k(); k > s.min_k() - 6; --k) {
    CHECK(cusick::delta_from_phi(s, k - 1) == cusick::delta_from_phi(s, k).halve());
  }
}

TEST_CASE("c examples") {
  CHECK(cusick::c(BitWord(0)) == Dyadic(1));
  CHECK(cusick::c(BitWord(1)) == d("3/2^2"));
  CHECK(cusick::c(BitWord(3)) == d("11/2^4"));
  // frozen from an independent rational-arithmetic recursion
  CHECK(cusick::c(BitWord(5)) == d("5/2^3"));
  CHECK(cusick::c(BitWord(7)) == d("43/2^6"));
  CHECK(cusick::c(BitWord(149)) == d("77/2^7"));
  CHECK(cusick::c(BitWord(235)) == d("71/2^7"));
}

TEST_CASE("pair_sum examples") {
  for (std::size_t lambda : {0u, 3u, 10u, 70u}) {
    const auto p = cusick::pair_sum(BitWord::pow2(lambda));
    CHECK(p.c_t == d("3/2^2"));
    CHECK(p.c_t_prime == d("3/2^2"));
    CHECK(p.sum == d("3/2^1"));
  }
  const auto p3 = cusick::pair_sum(BitWord(3));
  CHECK(p3.sum == d("11/2^3"));
  const auto p149 = cusick::pair_sum(BitWord(149));
  CHECK(p149.sum == d("37/2^5"));
  CHECK_THROWS_AS(cusick::pair_sum(BitWord(0)), std::domain_error);
}

TEST_CASE("sufficient condition examples") {
  CHECK(cusick::sufficient_condition(BitWord(1)).holds);
  const auto s3 = cusick::sufficient_condition(BitWord(3));
  CHECK(s3.holds);
  CHECK(s3.center_mass == Dyadic(1));
  const auto s149 = cusick::sufficient_condition(BitWord(149));
  // 17/128 + 11/64 + 1/8 = 55/128 dominates every |k| >= 2 value
  CHECK(s149.center_mass == d("55/2^7"));
  CHECK(s149.holds);
  CHECK_FALSE(s149.witness.has_value());
}

TEST_CASE("two computation paths for delta agree") {
  for (std::uint64_t t = 1; t < (1u << 10); ++t) {
    const BitWord w(t);
    const TailedDistribution dist = cusick::delta_dist(w);
    const cusick::Spectrum s = cusick::phi(w);
    const auto len = static_cast<std::int64_t>(w.bit_length());
    for (std::int64_t k = -len - 2; k <= len + 2; ++k) {
      REQUIRE(dist.at(k) == cusick::delta_from_phi(s, k));
    }
    CHECK(dist.total_mass() == Dyadic(1));
    CHECK(dist.mass_at_least(0) == cusick::c_from_phi(s));
    CHECK(cusick::c(w.doubled()) == cusick::c(w));
    CHECK(cusick::pair_sum(w).sum >= d("15/2^4"));
  }
}

TEST_CASE("delta recurrence") {
  for (std::uint64_t t = 1; t < 600; ++t) {
    const TailedDistribution odd = cusick::delta_dist(BitWord(2 * t + 1));
    const TailedDistribution lo = cusick::delta_dist(BitWord(t));
    const TailedDistribution hi = cusick::delta_dist(BitWord(t + 1));
    for (std::int64_t k = -14; k <= 14; ++k) {
      CHECK(odd.at(k) == (lo.at(k - 1) + hi.at(k + 1)).halve());
    }
    CHECK(cusick::delta_dist(BitWord(2 * t)) == lo);
  }
}

TEST_CASE("counting oracle agrees with exact densities") {
  constexpr std::uint64_t kLimit = 1u << 24;
  for (std::uint64_t t : {1u, 3u, 149u, 1000u}) {
    const cusick::Histogram h = cusick::histogram(BitWord(t), kLimit);
    const double exact = cusick::c(BitWord(t)).to_double();
    CHECK(std::abs(static_cast<double>(h.nonnegative()) / kLimit - exact) <= 1e-4);
    const cusick::Spectrum s = cusick::phi(BitWord(t));
    for (std::int64_t k = -12; k <= 12; ++k) {
      CHECK(std::abs(h.fraction(k) - cusick::delta_from_phi(s, k).to_double()) <= 1e-4);
    }
  }
}

TEST_CASE("tailed distribution arithmetic") {
  const TailedDistribution base = TailedDistribution::base();
  const TailedDistribution up = base.shifted(3);
  CHECK(up.at(4) == d("1/2^1"));
  CHECK(up.tail_start() == 4);
  CHECK(TailedDistribution::average(base, base) == base);
  // geometric law continuing into the window is absorbed into the tail
  const TailedDistribution merged({{1, d("1/2^1")}, {2, Dyadic(1)}}, 0, d("1/2^2"));
  CHECK(merged.tail_start() == 2);
  CHECK(merged.window().empty());
  CHECK(merged.mass_at_least(1) == d("3/2^1"));
}
