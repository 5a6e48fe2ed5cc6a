#include "cusick/bitword.hpp"

#include <ostream>
#include <stdexcept>

namespace cusick {

BitWord::BitWord(std::uint64_t value) {
  mpz_import(value_.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
}

BitWord::BitWord(mpz_class value) : value_(std::move(value)) {
  if (sgn(value_) < 0) throw std::invalid_argument("BitWord must be nonnegative");
}

BitWord BitWord::parse(std::string_view text) {
  int base = 10;
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
    base = 2;
    text.remove_prefix(2);
  }
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (const char ch : text) {
    const bool ok = base == 2 ? (ch == '0' || ch == '1') : (ch >= '0' && ch <= '9');
    if (!ok) throw std::invalid_argument("malformed integer literal: " + std::string(text));
  }
  return BitWord(mpz_class(std::string(text), base));
}

BitWord BitWord::alternating(std::size_t count) {
  mpz_class v;
  for (std::size_t i = 0; i < count; ++i) mpz_setbit(v.get_mpz_t(), 2 * i);
  return BitWord(std::move(v));
}

BitWord BitWord::pow2(std::size_t exponent) {
  mpz_class v;
  mpz_setbit(v.get_mpz_t(), exponent);
  return BitWord(std::move(v));
}

bool BitWord::bit(std::size_t j) const { return mpz_tstbit(value_.get_mpz_t(), j) != 0; }

std::size_t BitWord::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

bool BitWord::is_power_of_two() const {
  return !is_zero() && mpz_popcount(value_.get_mpz_t()) == 1;
}

std::optional<std::uint64_t> BitWord::to_u64() const {
  if (bit_length() > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

BitWord BitWord::doubled() const {
  mpz_class v;
  mpz_mul_2exp(v.get_mpz_t(), value_.get_mpz_t(), 1);
  return BitWord(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const BitWord& t) { return os << t.to_string(); }

std::int64_t lambda_of(const BitWord& t) {
  if (t.is_zero()) throw std::domain_error("lambda undefined for t = 0");
  return static_cast<std::int64_t>(t.bit_length()) - 1;
}

BitWord reflect(const BitWord& t) {
  const auto lambda = static_cast<std::size_t>(lambda_of(t));
  mpz_class three_pow;
  mpz_mul_2exp(three_pow.get_mpz_t(), mpz_class(3).get_mpz_t(), lambda);
  return BitWord(three_pow - t.value());
}

std::size_t count_blocks(const BitWord& t) {
  // a block top is a 1 whose next-higher digit is 0
  mpz_class above;
  mpz_fdiv_q_2exp(above.get_mpz_t(), t.value().get_mpz_t(), 1);
  mpz_class tops;
  mpz_com(above.get_mpz_t(), above.get_mpz_t());
  mpz_and(tops.get_mpz_t(), t.value().get_mpz_t(), above.get_mpz_t());
  return mpz_popcount(tops.get_mpz_t());
}

std::vector<std::size_t> pattern_positions(const BitWord& t) {
  std::vector<std::size_t> out;
  const std::size_t len = t.bit_length();
  if (len < 4) return out;
  const std::size_t nu = len - 1;
  std::optional<std::size_t> last;
  for (std::size_t j = 0; j + 3 <= nu; ++j) {
    if (!t.bit(j) || t.bit(j + 1)) continue;
    if (last && j - *last < 3) continue;
    out.push_back(j);
    last = j;
  }
  return out;
}

}  // namespace cusick
