#pragma once

#include <cstdint>
#include <map>

#include "cusick/bitword.hpp"

namespace cusick {

/// Binary sum of digits.
std::size_t digit_sum(const BitWord& n);

/// Counts of s(n + t) - s(n) = k over n in [0, limit).
struct Histogram {
  std::map<std::int64_t, std::uint64_t> counts;
  std::uint64_t limit = 0;

  [[nodiscard]] std::uint64_t count(std::int64_t k) const;
  [[nodiscard]] double fraction(std::int64_t k) const;
  /// Number of n with s(n + t) >= s(n).
  [[nodiscard]] std::uint64_t nonnegative() const;
  Histogram& operator+=(const Histogram& other);
};

/// Direct counting, no recurrences. The range is split into `jobs`
/// contiguous pieces counted on separate threads and merged; the result does
/// not depend on `jobs`. Throws std::invalid_argument for limit = 0.
Histogram histogram(const BitWord& t, std::uint64_t limit, unsigned jobs = 1);

/// Counts over [begin, end) only.
Histogram histogram_range(const BitWord& t, std::uint64_t begin, std::uint64_t end);

/// |{n < limit : s(n + t) >= s(n)}| / limit.
double oracle_ct(const BitWord& t, std::uint64_t limit, unsigned jobs = 1);

}  // namespace cusick
