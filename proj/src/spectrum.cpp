#include "cusick/spectrum.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace cusick {

Spectrum::Spectrum(Map entries, BitWord t) : entries_(std::move(entries)), t_(std::move(t)) {
  std::erase_if(entries_, [](const auto& kv) { return kv.second.is_zero(); });
}

Spectrum Spectrum::atom(std::int64_t k, BitWord t) { return Spectrum({{k, Dyadic(1)}}, std::move(t)); }

Dyadic Spectrum::at(std::int64_t k) const {
  const auto it = entries_.find(k);
  return it == entries_.end() ? Dyadic() : it->second;
}

std::int64_t Spectrum::min_k() const {
  if (entries_.empty()) throw std::logic_error("empty spectrum has no support");
  return entries_.begin()->first;
}

std::int64_t Spectrum::max_k() const {
  if (entries_.empty()) throw std::logic_error("empty spectrum has no support");
  return entries_.rbegin()->first;
}

Dyadic Spectrum::total_mass() const {
  Dyadic sum;
  for (const auto& [k, v] : entries_) sum += v;
  return sum;
}

Spectrum Spectrum::shifted(std::int64_t d) const {
  Map out;
  for (const auto& [k, v] : entries_) out.emplace_hint(out.end(), k + d, v);
  return Spectrum(std::move(out), t_);
}

Spectrum Spectrum::mirrored() const {
  Map out;
  for (const auto& [k, v] : entries_) out.emplace(-k, v);
  return Spectrum(std::move(out), t_);
}

namespace {

// half * shift(lo, +1) + half * shift(hi, -1)
Spectrum::Map mix(const Spectrum& lo, const Spectrum& hi) {
  Spectrum::Map out;
  for (const auto& [k, v] : lo.entries()) out[k + 1] += v.halve();
  for (const auto& [k, v] : hi.entries()) out[k - 1] += v.halve();
  return out;
}

}  // namespace

SpectrumPair::SpectrumPair()
    : lo_(Spectrum::atom(0, BitWord(1))), hi_(Spectrum::atom(0, BitWord(2))), u_(1) {}

void SpectrumPair::push_digit(bool digit) {
  Spectrum mixed(mix(lo_, hi_), u_.doubled().plus(1));
  u_ = digit ? u_.doubled().plus(1) : u_.doubled();
  if (digit) {
    lo_ = std::move(mixed);
    hi_ = Spectrum(hi_.entries(), u_.plus(1));
  } else {
    hi_ = std::move(mixed);
    lo_ = Spectrum(lo_.entries(), u_);
  }
}

namespace {

void double_in_place(std::uint64_t& v) { v <<= 1; }
void double_in_place(mpz_class& v) { mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), 1); }
void add_into(std::uint64_t& dst, std::uint64_t a, std::uint64_t b) { dst = a + b; }
void add_into(mpz_class& dst, const mpz_class& a, const mpz_class& b) {
  mpz_add(dst.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
bool is_nonzero(std::uint64_t v) { return v != 0; }
bool is_nonzero(const mpz_class& v) { return sgn(v) != 0; }
mpz_class to_mpz(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }
const mpz_class& to_mpz(const mpz_class& v) { return v; }

// Pair iteration on integer arrays scaled by 2^exp. Every step doubles the
// untouched component and replaces the other by the unscaled mix, so one
// exponent serves both. Entries stay <= 2^steps.
template <class Int>
class PairEngine {
 public:
  explicit PairEngine(std::size_t steps)
      : offset_(static_cast<std::int64_t>(steps) + 1),
        lo_(2 * steps + 3),
        hi_(2 * steps + 3),
        scratch_(2 * steps + 3) {
    lo_[offset_] = 1;
    hi_[offset_] = 1;
  }

  void push(bool digit) {
    const std::int64_t first = std::min(lo_first_ + 1, hi_first_ - 1);
    const std::int64_t last = std::max(lo_last_ + 1, hi_last_ - 1);
    const Int zero{};
    for (std::int64_t k = first; k <= last; ++k) {
      const Int& a = (k - 1 >= lo_first_ && k - 1 <= lo_last_) ? lo_[k - 1 + offset_] : zero;
      const Int& b = (k + 1 >= hi_first_ && k + 1 <= hi_last_) ? hi_[k + 1 + offset_] : zero;
      add_into(scratch_[k + offset_], a, b);
    }
    auto& keep = digit ? hi_ : lo_;
    const auto [keep_first, keep_last] =
        digit ? std::pair(hi_first_, hi_last_) : std::pair(lo_first_, lo_last_);
    for (std::int64_t k = keep_first; k <= keep_last; ++k) double_in_place(keep[k + offset_]);
    // scratch_ is all zero on entry; after the swap it holds the replaced
    // component, which is cleared again
    auto& replaced = digit ? lo_ : hi_;
    const auto [old_first, old_last] =
        digit ? std::pair(lo_first_, lo_last_) : std::pair(hi_first_, hi_last_);
    std::swap(replaced, scratch_);
    for (std::int64_t k = old_first; k <= old_last; ++k) scratch_[k + offset_] = zero;
    if (digit) {
      lo_first_ = first;
      lo_last_ = last;
    } else {
      hi_first_ = first;
      hi_last_ = last;
    }
    ++exp_;
  }

  Spectrum::Map lo_map() const {
    Spectrum::Map out;
    for (std::int64_t k = lo_first_; k <= lo_last_; ++k) {
      const Int& v = lo_[k + offset_];
      if (is_nonzero(v)) out.emplace_hint(out.end(), k, Dyadic::from_parts(to_mpz(v), exp_));
    }
    return out;
  }

 private:
  std::int64_t offset_;
  std::vector<Int> lo_;
  std::vector<Int> hi_;
  std::vector<Int> scratch_;
  std::int64_t lo_first_ = 0, lo_last_ = 0;
  std::int64_t hi_first_ = 0, hi_last_ = 0;
  std::int64_t exp_ = 0;
};

template <class Int>
Spectrum::Map run_engine(const BitWord& t) {
  const std::size_t len = t.bit_length();
  PairEngine<Int> engine(len - 1);
  for (std::size_t j = len - 1; j-- > 0;) engine.push(t.bit(j));
  return engine.lo_map();
}

}  // namespace

Spectrum phi(const BitWord& t) {
  if (t.is_zero()) throw std::domain_error("phi is defined for t >= 1");
  if (t.bit_length() <= 62) return Spectrum(run_engine<std::uint64_t>(t), t);
  return Spectrum(run_engine<mpz_class>(t), t);
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::int64_t>& key) const noexcept {
    return std::hash<std::uint64_t>{}(key.first * 0x9E3779B97F4A7C15ULL ^
                                      static_cast<std::uint64_t>(key.second));
  }
};

using Memo = std::unordered_map<std::pair<std::uint64_t, std::int64_t>, Dyadic, KeyHash>;

Dyadic phi_rec(std::uint64_t t, std::int64_t k, Memo& memo) {
  if (t == 1) return k == 0 ? Dyadic(1) : Dyadic();
  if (t % 2 == 0) return phi_rec(t / 2, k, memo);
  // |k| never exceeds the bit length
  if (std::abs(k) > 64) return Dyadic();
  const auto key = std::pair(t, k);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  const std::uint64_t half = t / 2;
  Dyadic value = (phi_rec(half, k - 1, memo) + phi_rec(half + 1, k + 1, memo)).halve();
  memo.emplace(key, value);
  return value;
}

}  // namespace

Dyadic phi_naive(const BitWord& t, std::int64_t k) {
  if (t.is_zero()) throw std::domain_error("phi is defined for t >= 1");
  if (t.bit_length() > 24) throw std::invalid_argument("phi_naive is limited to t < 2^24");
  Memo memo;
  return phi_rec(*t.to_u64(), k, memo);
}

std::vector<std::int64_t> argmax_set(const Spectrum& s) {
  std::vector<std::int64_t> out;
  const Dyadic* best = nullptr;
  for (const auto& [k, v] : s.entries()) {
    if (best == nullptr || v > *best) {
      best = &v;
      out.assign(1, k);
    } else if (v == *best) {
      out.push_back(k);
    }
  }
  return out;
}

}  // namespace cusick
