#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "cusick/bitword.hpp"
#include "cusick/dyadic.hpp"
#include "cusick/spectrum.hpp"

namespace cusick {

/// A mass function on the integers with an infinite geometric lower tail:
/// value(k) = tail_value * 2^(k - tail_start) for k <= tail_start, and
/// window[k] (zero if absent) above it. tail_start is kept maximal, so equal
/// distributions compare equal field by field.
class TailedDistribution {
 public:
  using Window = std::map<std::int64_t, Dyadic>;

  TailedDistribution(Window window, std::int64_t tail_start, Dyadic tail_value);

  /// delta(., 1): 2^(k-2) for k <= 1, zero above.
  static TailedDistribution base();

  [[nodiscard]] const Window& window() const { return window_; }
  [[nodiscard]] std::int64_t tail_start() const { return tail_start_; }
  [[nodiscard]] const Dyadic& tail_value() const { return tail_value_; }

  [[nodiscard]] Dyadic at(std::int64_t k) const;
  /// Largest k with nonzero mass.
  [[nodiscard]] std::int64_t top() const;
  [[nodiscard]] Dyadic total_mass() const;
  /// Sum of the masses at k >= from.
  [[nodiscard]] Dyadic mass_at_least(std::int64_t from) const;

  [[nodiscard]] TailedDistribution shifted(std::int64_t d) const;
  /// (a + b) / 2.
  static TailedDistribution average(const TailedDistribution& a, const TailedDistribution& b);

  friend bool operator==(const TailedDistribution&, const TailedDistribution&) = default;

 private:
  void canonicalize();

  Window window_;
  std::int64_t tail_start_;
  Dyadic tail_value_;
};

/// delta(., t) by the pair iteration started from (delta(., 1), delta(., 2)).
/// Throws std::domain_error for t = 0.
TailedDistribution delta_dist(const BitWord& t);

/// delta(k, t) = sum over l >= 0 of phi(k - 1 + l, t) 2^(-l-1).
Dyadic delta_from_phi(const Spectrum& phi_t, std::int64_t k);
Dyadic delta_from_phi(const BitWord& t, std::int64_t k);

/// c_t = sum over j >= -1 of phi(j, t) (1 - 2^(-j-2)); c_0 = 1.
Dyadic c(const BitWord& t);
Dyadic c_from_phi(const Spectrum& phi_t);

struct PairSum {
  Dyadic c_t;
  Dyadic c_t_prime;
  Dyadic sum;
};

/// c_t, c_t' and their sum. c_t' is computed from phi(., t') directly and the
/// sum is checked against the weighted form 3/2 phi(0) + 11/8 phi(+-1) + ...
/// of phi(., t); a mismatch throws std::logic_error.
PairSum pair_sum(const BitWord& t);
/// Same, from phi(., t) and phi(., t') computed by the caller.
PairSum pair_sum(const Spectrum& phi_t, const Spectrum& phi_t_prime);

/// sum over l of w_l phi(l, t) with w_0 = 3/2, w_{+-1} = 11/8 and
/// w_l = 1 - 2^(-|l|-2) otherwise.
Dyadic pair_sum_weighted(const Spectrum& phi_t);

struct SufficientCondition {
  bool holds = true;
  /// phi(-1) + phi(0) + phi(1).
  Dyadic center_mass;
  /// On failure, the |k| >= 2 position carrying the most mass (lowest k on ties).
  std::optional<std::int64_t> witness;
};

/// phi(-1,t) + phi(0,t) + phi(1,t) >= phi(k,t) for all |k| >= 2.
SufficientCondition sufficient_condition(const Spectrum& phi_t);
SufficientCondition sufficient_condition(const BitWord& t);

}  // namespace cusick
