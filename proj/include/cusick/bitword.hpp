#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cusick {

/// Arbitrary-size nonnegative integer viewed through its binary digits.
/// Digits are indexed least-significant first: bit(0) is the parity.
class BitWord {
 public:
  BitWord() = default;
  BitWord(std::uint64_t value);  // NOLINT(google-explicit-constructor)
  explicit BitWord(mpz_class value);

  /// Decimal, or binary with a 0b prefix. Underscores are not accepted.
  static BitWord parse(std::string_view text);
  /// Sum of 4^i for i < count: (0101...01)_2 with exactly `count` blocks.
  static BitWord alternating(std::size_t count);
  static BitWord pow2(std::size_t exponent);

  [[nodiscard]] bool bit(std::size_t j) const;
  /// 0 for zero, otherwise nu + 1.
  [[nodiscard]] std::size_t bit_length() const;
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_power_of_two() const;
  [[nodiscard]] std::optional<std::uint64_t> to_u64() const;
  [[nodiscard]] const mpz_class& value() const { return value_; }

  [[nodiscard]] std::string to_string() const { return value_.get_str(); }
  [[nodiscard]] std::string to_binary() const { return value_.get_str(2); }

  [[nodiscard]] BitWord plus(std::uint64_t d) const { return BitWord(value_ + d); }
  [[nodiscard]] BitWord doubled() const;

  friend bool operator==(const BitWord& a, const BitWord& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BitWord& t);

/// lambda with 2^lambda <= t < 2^(lambda+1). Throws std::domain_error for t = 0.
std::int64_t lambda_of(const BitWord& t);

/// t' = 3 * 2^lambda - t. Lies in (2^lambda, 2^(lambda+1)]; not involutive at
/// powers of two. Throws std::domain_error for t = 0.
BitWord reflect(const BitWord& t);

/// Number of maximal runs of 1-digits.
std::size_t count_blocks(const BitWord& t);

/// Positions j <= nu - 3, pairwise at distance >= 3, where the digit triple
/// (e_j, e_{j+1}, e_{j+2}) is (1,0,0) or (1,0,1). Candidates are the top
/// digit of every block below the leading one, selected greedily from the
/// least significant end. With B blocks at least floor((B-1)/2) positions
/// come back.
std::vector<std::size_t> pattern_positions(const BitWord& t);

}  // namespace cusick
