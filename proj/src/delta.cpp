#include "cusick/delta.hpp"

#include <stdexcept>

namespace cusick {

TailedDistribution::TailedDistribution(Window window, std::int64_t tail_start, Dyadic tail_value)
    : window_(std::move(window)), tail_start_(tail_start), tail_value_(std::move(tail_value)) {
  canonicalize();
}

TailedDistribution TailedDistribution::base() {
  return TailedDistribution({}, 1, Dyadic(1).halve());
}

void TailedDistribution::canonicalize() {
  std::erase_if(window_, [this](const auto& kv) {
    return kv.first <= tail_start_ || kv.second.is_zero();
  });
  // pull the tail upward while the next value continues the geometric law
  while (!tail_value_.is_zero()) {
    const auto it = window_.find(tail_start_ + 1);
    if (it == window_.end() || it->second != tail_value_.scale_pow2(1)) break;
    tail_value_ = it->second;
    ++tail_start_;
    window_.erase(it);
  }
}

Dyadic TailedDistribution::at(std::int64_t k) const {
  if (k <= tail_start_) return tail_value_.scale_pow2(k - tail_start_);
  const auto it = window_.find(k);
  return it == window_.end() ? Dyadic() : it->second;
}

std::int64_t TailedDistribution::top() const {
  if (!window_.empty()) return window_.rbegin()->first;
  return tail_start_;
}

Dyadic TailedDistribution::total_mass() const {
  return mass_at_least(tail_start_) + tail_value_;
}

Dyadic TailedDistribution::mass_at_least(std::int64_t from) const {
  Dyadic sum;
  for (auto it = window_.lower_bound(from); it != window_.end(); ++it) sum += it->second;
  if (from <= tail_start_) {
    // sum_{from <= k <= s} v 2^{k-s} = 2v - v 2^{from-s}
    sum += tail_value_.scale_pow2(1) - tail_value_.scale_pow2(from - tail_start_);
  }
  return sum;
}

TailedDistribution TailedDistribution::shifted(std::int64_t d) const {
  Window out;
  for (const auto& [k, v] : window_) out.emplace_hint(out.end(), k + d, v);
  return TailedDistribution(std::move(out), tail_start_ + d, tail_value_);
}

TailedDistribution TailedDistribution::average(const TailedDistribution& a,
                                               const TailedDistribution& b) {
  const std::int64_t start = std::min(a.tail_start_, b.tail_start_);
  const std::int64_t top = std::max(a.top(), b.top());
  Window out;
  for (std::int64_t k = start + 1; k <= top; ++k) {
    Dyadic v = (a.at(k) + b.at(k)).halve();
    if (!v.is_zero()) out.emplace_hint(out.end(), k, std::move(v));
  }
  return TailedDistribution(std::move(out), start, (a.at(start) + b.at(start)).halve());
}

TailedDistribution delta_dist(const BitWord& t) {
  if (t.is_zero()) throw std::domain_error("delta is defined for t >= 1");
  TailedDistribution lo = TailedDistribution::base();
  TailedDistribution hi = lo;
  for (std::size_t j = t.bit_length() - 1; j-- > 0;) {
    TailedDistribution mixed = TailedDistribution::average(lo.shifted(1), hi.shifted(-1));
    (t.bit(j) ? lo : hi) = std::move(mixed);
  }
  return lo;
}

Dyadic delta_from_phi(const Spectrum& phi_t, std::int64_t k) {
  // phi(j) contributes phi(j) 2^{k-j-2} for j >= k-1
  Dyadic sum;
  for (auto it = phi_t.entries().lower_bound(k - 1); it != phi_t.entries().end(); ++it) {
    sum += it->second.scale_pow2(k - it->first - 2);
  }
  return sum;
}

Dyadic delta_from_phi(const BitWord& t, std::int64_t k) { return delta_from_phi(phi(t), k); }

Dyadic c_from_phi(const Spectrum& phi_t) {
  Dyadic sum;
  for (auto it = phi_t.entries().lower_bound(-1); it != phi_t.entries().end(); ++it) {
    sum += it->second * Dyadic::one_minus_pow2(it->first + 2);
  }
  return sum;
}

Dyadic c(const BitWord& t) {
  if (t.is_zero()) return Dyadic(1);
  return c_from_phi(phi(t));
}

Dyadic pair_sum_weighted(const Spectrum& phi_t) {
  Dyadic sum;
  for (const auto& [k, v] : phi_t.entries()) {
    const std::int64_t a = k < 0 ? -k : k;
    if (a == 0) {
      sum += v * Dyadic(3).halve();
    } else if (a == 1) {
      sum += v * Dyadic(11).scale_pow2(-3);
    } else {
      sum += v * Dyadic::one_minus_pow2(a + 2);
    }
  }
  return sum;
}

PairSum pair_sum(const Spectrum& phi_t, const Spectrum& phi_t_prime) {
  PairSum out{c_from_phi(phi_t), c_from_phi(phi_t_prime), {}};
  out.sum = out.c_t + out.c_t_prime;
  if (out.sum != pair_sum_weighted(phi_t)) {
    throw std::logic_error("pair sum disagrees with the weighted phi form at t = " +
                           phi_t.t().to_string());
  }
  return out;
}

PairSum pair_sum(const BitWord& t) {
  if (t.is_zero()) throw std::domain_error("t' is undefined for t = 0");
  return pair_sum(phi(t), phi(reflect(t)));
}

SufficientCondition sufficient_condition(const Spectrum& phi_t) {
  SufficientCondition out;
  out.center_mass = phi_t.at(-1) + phi_t.at(0) + phi_t.at(1);
  const Dyadic* worst = nullptr;
  for (const auto& [k, v] : phi_t.entries()) {
    if (k >= -1 && k <= 1) continue;
    if (v > out.center_mass && (worst == nullptr || v > *worst)) {
      worst = &v;
      out.witness = k;
    }
  }
  out.holds = !out.witness.has_value();
  return out;
}

SufficientCondition sufficient_condition(const BitWord& t) { return sufficient_condition(phi(t)); }

}  // namespace cusick
