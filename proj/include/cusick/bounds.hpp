#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "cusick/bitword.hpp"
#include "cusick/delta.hpp"
#include "cusick/dyadic.hpp"
#include "cusick/spectrum.hpp"

namespace cusick {

/// a_l = 1 - 2^(-|l|-2).
Dyadic weight(std::int64_t l);
/// 3/2 at 0, 11/8 at +-1, weight(l) elsewhere.
Dyadic weight_tilde(std::int64_t l);

/// min of weight(l) over l = b (mod m), in closed form. Requires 0 <= b < m.
Dyadic min_weight(std::int64_t b, std::int64_t m);

/// sum over b < m of min_weight(b, m), exactly.
Dyadic min_weight_sum(std::int64_t m);

/// m (1 - 2^(-N-2)) - 2N, a lower bound for min_weight_sum(m). Requires
/// 1 <= N <= m.
Dyadic mean_weight_lower_bound(std::int64_t m, std::int64_t N);

/// sum over b of psi(b, m, t) min_weight(b, m); a certified lower bound for
/// c_t + c_t'.
Dyadic pair_lower_bound_via_residues(const Spectrum& phi_t, std::int64_t m);
Dyadic pair_lower_bound_via_residues(const BitWord& t, std::int64_t m);

/// Parameters N, m, M, C = 2M + 1 derived from epsilon, chosen so that each
/// of 2^(-N-2), 2N/m and m exp(-M/(2m^2)) is below epsilon/3.
struct BoundParams {
  double epsilon = 0.0;
  std::int64_t N = 0;
  std::int64_t m = 0;
  std::int64_t M = 0;
  std::int64_t C = 0;

  /// {2^(-N-2), 2N/m, m exp(-M/(2m^2))}.
  [[nodiscard]] std::array<double, 3> error_terms() const;
};

/// Throws std::invalid_argument unless 0 < epsilon < 1.
BoundParams params_for(double epsilon);

/// 1 - 2^(-N-2) - 2N/m - m exp(-M/(2m^2)).
double theorem_lower_bound(const BoundParams& p);

struct TheoremReport {
  BoundParams params;
  BitWord t;
  std::size_t blocks = 0;
  bool hypothesis_met = false;
  PairSum pair;
  /// Exact pair sum is at least 15/16; holds for every t.
  bool floor_holds = false;
  /// Residue-class bound at modulus params.m.
  Dyadic residue_bound;
  /// Set only when the block hypothesis is met: pair sum > 1 - epsilon.
  std::optional<bool> inequality_holds;

  /// A proven statement failed.
  [[nodiscard]] bool hard_violation() const {
    return !floor_holds || residue_bound > pair.sum || inequality_holds == false;
  }
};

TheoremReport verify_main_theorem(const BitWord& t, double epsilon);

}  // namespace cusick
