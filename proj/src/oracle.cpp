#include "cusick/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <thread>
#include <vector>

namespace cusick {

std::size_t digit_sum(const BitWord& n) { return mpz_popcount(n.value().get_mpz_t()); }

std::uint64_t Histogram::count(std::int64_t k) const {
  const auto it = counts.find(k);
  return it == counts.end() ? 0 : it->second;
}

double Histogram::fraction(std::int64_t k) const {
  return static_cast<double>(count(k)) / static_cast<double>(limit);
}

std::uint64_t Histogram::nonnegative() const {
  std::uint64_t total = 0;
  for (auto it = counts.lower_bound(0); it != counts.end(); ++it) total += it->second;
  return total;
}

Histogram& Histogram::operator+=(const Histogram& other) {
  for (const auto& [k, n] : other.counts) counts[k] += n;
  limit += other.limit;
  return *this;
}

Histogram histogram_range(const BitWord& t, std::uint64_t begin, std::uint64_t end) {
  // t = high * 2^64 + low; a carry out of the low word adds one to the high part
  mpz_class high;
  mpz_fdiv_q_2exp(high.get_mpz_t(), t.value().get_mpz_t(), 64);
  const mpz_class low_part = t.value() - (high << 64);
  const std::uint64_t low = *BitWord(low_part).to_u64();
  const int high_sum[2] = {static_cast<int>(mpz_popcount(high.get_mpz_t())),
                           static_cast<int>(digit_sum(BitWord(high + 1)))};

  // s(n + t) - s(n) lies in [-64, s(t)]
  constexpr int kOffset = 64;
  const std::size_t width =
      static_cast<std::size_t>(kOffset + 66 + std::max(high_sum[0], high_sum[1]));
  constexpr int kLanes = 4;
  std::vector<std::uint64_t> bins(width * kLanes, 0);

  std::uint64_t n = begin;
  const auto step = [&](std::uint64_t x, std::size_t lane) {
    const std::uint64_t sum = x + low;
    const int carry = sum < x ? 1 : 0;
    const int d = std::popcount(sum) + high_sum[carry] - std::popcount(x);
    ++bins[lane * width + static_cast<std::size_t>(d + kOffset)];
  };
  for (; n + kLanes <= end && n + kLanes > n; n += kLanes) {
    step(n, 0);
    step(n + 1, 1);
    step(n + 2, 2);
    step(n + 3, 3);
  }
  for (; n < end; ++n) step(n, 0);

  Histogram out;
  out.limit = end - begin;
  for (std::size_t i = 0; i < width; ++i) {
    std::uint64_t total = 0;
    for (int lane = 0; lane < kLanes; ++lane) total += bins[lane * width + i];
    if (total != 0) out.counts.emplace(static_cast<std::int64_t>(i) - kOffset, total);
  }
  return out;
}

Histogram histogram(const BitWord& t, std::uint64_t limit, unsigned jobs) {
  if (limit == 0) throw std::invalid_argument("histogram needs limit >= 1");
  if (jobs <= 1 || limit < jobs) return histogram_range(t, 0, limit);
  std::vector<Histogram> parts(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned i = 0; i < jobs; ++i) {
    const std::uint64_t lo = limit / jobs * i;
    const std::uint64_t hi = i + 1 == jobs ? limit : limit / jobs * (i + 1);
    workers.emplace_back([&, i, lo, hi] { parts[i] = histogram_range(t, lo, hi); });
  }
  for (auto& w : workers) w.join();
  Histogram out;
  for (const auto& p : parts) out += p;
  return out;
}

double oracle_ct(const BitWord& t, std::uint64_t limit, unsigned jobs) {
  const Histogram h = histogram(t, limit, jobs);
  return static_cast<double>(h.nonnegative()) / static_cast<double>(limit);
}

}  // namespace cusick
