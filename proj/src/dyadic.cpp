#include "cusick/dyadic.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace cusick {

namespace {

mpz_class shifted_left(const mpz_class& value, std::int64_t bits) {
  mpz_class out;
  mpz_mul_2exp(out.get_mpz_t(), value.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return out;
}

mpz_class parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("malformed integer literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
  }
  mpz_class out(std::string(text.substr(text[0] == '+' ? 1 : 0)), 10);
  return out;
}

}  // namespace

Dyadic Dyadic::from_parts(mpz_class num, std::int64_t exp) {
  Dyadic out;
  out.num_ = std::move(num);
  if (exp < 0) {
    out.num_ = shifted_left(out.num_, -exp);
    exp = 0;
  }
  out.exp_ = exp;
  out.normalize();
  return out;
}

Dyadic Dyadic::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
  if (value == 0.0) return Dyadic();
  int e = 0;
  const double mant = std::frexp(value, &e);  // value = mant * 2^e, 0.5 <= |mant| < 1
  constexpr int kBits = std::numeric_limits<double>::digits;
  const auto scaled = static_cast<long long>(std::ldexp(mant, kBits));
  return from_parts(mpz_class(std::to_string(scaled)), kBits - e);
}

Dyadic Dyadic::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_integer(text));
  const auto denom = text.substr(slash + 1);
  if (denom.size() < 3 || denom[0] != '2' || denom[1] != '^') {
    throw std::invalid_argument("dyadic denominator must be 2^exp: " + std::string(text));
  }
  const mpz_class exp = parse_integer(denom.substr(2));
  if (sgn(exp) < 0 || !exp.fits_slong_p()) {
    throw std::invalid_argument("dyadic exponent out of range: " + std::string(text));
  }
  return from_parts(parse_integer(text.substr(0, slash)), exp.get_si());
}

Dyadic Dyadic::one_minus_pow2(std::int64_t k) {
  return Dyadic(1) - Dyadic(1).scale_pow2(-k);
}

void Dyadic::normalize() {
  if (sgn(num_) == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  const auto twos = static_cast<std::int64_t>(mpz_scan1(num_.get_mpz_t(), 0));
  const std::int64_t drop = std::min(twos, exp_);
  if (drop > 0) {
    mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
    exp_ -= drop;
  }
}

Dyadic Dyadic::halve() const { return scale_pow2(-1); }

Dyadic Dyadic::scale_pow2(std::int64_t k) const {
  if (is_zero()) return *this;
  Dyadic out = *this;
  if (k < 0) {
    out.exp_ -= k;
    out.normalize();
  } else if (k <= out.exp_) {
    out.exp_ -= k;
  } else {
    out.num_ = shifted_left(out.num_, k - out.exp_);
    out.exp_ = 0;
  }
  return out;
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return num_.get_str();
  return num_.get_str() + "/2^" + std::to_string(exp_);
}

std::string Dyadic::to_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class mag = abs(num_) * pow10;
  if (exp_ > 0) {
    // round half away from zero: add 2^(exp-1) then truncate
    mpz_class half;
    mpz_setbit(half.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_ - 1));
    mag += half;
    mpz_fdiv_q_2exp(mag.get_mpz_t(), mag.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
  }
  std::string body = mag.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sgn(num_) < 0 && sgn(mag) != 0) body.insert(0, "-");
  return body;
}

double Dyadic::to_double() const {
  long e = 0;
  const double mant = mpz_get_d_2exp(&e, num_.get_mpz_t());
  return std::ldexp(mant, static_cast<int>(std::max<std::int64_t>(
                              e - exp_, std::numeric_limits<int>::min() / 2)));
}

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  if (other.is_zero()) return *this;
  if (exp_ == other.exp_) {
    num_ += other.num_;
  } else if (exp_ < other.exp_) {
    num_ = shifted_left(num_, other.exp_ - exp_) + other.num_;
    exp_ = other.exp_;
  } else {
    num_ += shifted_left(other.num_, exp_ - other.exp_);
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& other) { return *this += -other; }

Dyadic& Dyadic::operator*=(const Dyadic& other) {
  num_ *= other.num_;
  exp_ += other.exp_;
  normalize();
  return *this;
}

Dyadic operator-(const Dyadic& a) {
  Dyadic out = a;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int c = 0;
  if (a.exp_ == b.exp_) {
    c = cmp(a.num_, b.num_);
  } else if (a.exp_ < b.exp_) {
    c = cmp(shifted_left(a.num_, b.exp_ - a.exp_), b.num_);
  } else {
    c = cmp(a.num_, shifted_left(b.num_, a.exp_ - b.exp_));
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Dyadic add(const Dyadic& a, const Dyadic& b) { return a + b; }

std::strong_ordering compare(const Dyadic& a, const Dyadic& b) { return a <=> b; }

std::ostream& operator<<(std::ostream& os, const Dyadic& value) {
  return os << value.to_string();
}

}  // namespace cusick
