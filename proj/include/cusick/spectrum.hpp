#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cusick/bitword.hpp"
#include "cusick/dyadic.hpp"

namespace cusick {

/// Finitely supported mass k -> phi(k, t). Only strictly positive values are
/// stored; iteration is in increasing k.
class Spectrum {
 public:
  using Map = std::map<std::int64_t, Dyadic>;

  Spectrum() = default;
  Spectrum(Map entries, BitWord t);

  static Spectrum atom(std::int64_t k, BitWord t);

  [[nodiscard]] const Map& entries() const { return entries_; }
  [[nodiscard]] const BitWord& t() const { return t_; }
  [[nodiscard]] Dyadic at(std::int64_t k) const;
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::int64_t min_k() const;
  [[nodiscard]] std::int64_t max_k() const;
  [[nodiscard]] Dyadic total_mass() const;

  /// Mass at k moves to k + d.
  [[nodiscard]] Spectrum shifted(std::int64_t d) const;
  /// k -> phi(-k).
  [[nodiscard]] Spectrum mirrored() const;

  /// Equal as maps; the provenance tag is ignored.
  friend bool operator==(const Spectrum& a, const Spectrum& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Map entries_;
  BitWord t_;
};

/// (phi(., u), phi(., u+1)) advanced one binary digit at a time from the most
/// significant end. This is the readable form of the iteration; phi() runs
/// the same update on scaled integer arrays.
class SpectrumPair {
 public:
  /// u = 1, both components the atom at 0 (phi(., 1) = phi(., 2)).
  SpectrumPair();

  void push_digit(bool digit);

  [[nodiscard]] const Spectrum& lo() const { return lo_; }
  [[nodiscard]] const Spectrum& hi() const { return hi_; }
  [[nodiscard]] const BitWord& u() const { return u_; }

 private:
  Spectrum lo_;
  Spectrum hi_;
  BitWord u_;
};

/// Exact phi(., t). Throws std::domain_error for t = 0.
Spectrum phi(const BitWord& t);

/// phi(k, t) by memoized top-down recursion. Independent of phi(); limited to
/// t < 2^24. Throws std::domain_error for t = 0 and std::invalid_argument for
/// larger t.
Dyadic phi_naive(const BitWord& t, std::int64_t k);

/// Every k at which the maximum mass is attained, increasing.
std::vector<std::int64_t> argmax_set(const Spectrum& s);

}  // namespace cusick
