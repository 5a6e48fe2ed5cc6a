#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cusick {

/// Exact rational number of the form num / 2^exp.
///
/// The representation is kept normalized: num is odd, or num == 0 and
/// exp == 0. Two equal values therefore have identical fields, which makes
/// equality a field comparison and the text form canonical.
///
/// Text form is "num/2^exp", with a bare integer when exp == 0 ("0", "3",
/// "-1"). parse() accepts exactly what to_string() produces, plus
/// unnormalized "num/2^exp" inputs.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Dyadic(mpz_class value) : num_(std::move(value)) {}

  static Dyadic from_parts(mpz_class num, std::int64_t exp);
  /// Exact conversion; every finite double is dyadic.
  static Dyadic from_double(double value);
  static Dyadic parse(std::string_view text);
  /// 1 - 2^{-k}, the shape of every weight in the density identities.
  static Dyadic one_minus_pow2(std::int64_t k);

  [[nodiscard]] const mpz_class& numerator() const { return num_; }
  [[nodiscard]] std::int64_t exponent() const { return exp_; }
  [[nodiscard]] bool is_zero() const { return sgn(num_) == 0; }
  [[nodiscard]] int sign() const { return sgn(num_); }

  [[nodiscard]] Dyadic halve() const;
  /// Multiplies by 2^k; k may be negative.
  [[nodiscard]] Dyadic scale_pow2(std::int64_t k) const;

  [[nodiscard]] std::string to_string() const;
  /// Fixed-point decimal with `digits` fractional digits, rounded half away
  /// from zero.
  [[nodiscard]] std::string to_decimal(int digits) const;
  [[nodiscard]] double to_double() const;

  Dyadic& operator+=(const Dyadic& other);
  Dyadic& operator-=(const Dyadic& other);
  Dyadic& operator*=(const Dyadic& other);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  friend Dyadic operator-(const Dyadic& a);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  mpz_class num_{0};
  std::int64_t exp_ = 0;
};

Dyadic add(const Dyadic& a, const Dyadic& b);
std::strong_ordering compare(const Dyadic& a, const Dyadic& b);

std::ostream& operator<<(std::ostream& os, const Dyadic& value);

}  // namespace cusick
