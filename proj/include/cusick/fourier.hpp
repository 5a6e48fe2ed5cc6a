#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "cusick/bitword.hpp"
#include "cusick/dyadic.hpp"
#include "cusick/spectrum.hpp"

namespace cusick {

using Complex = std::complex<double>;

/// theta = j/m reduced to lowest terms with 0 <= j < m.
class RationalAngle {
 public:
  RationalAngle(std::int64_t j, std::int64_t m);

  [[nodiscard]] std::int64_t num() const { return j_; }
  [[nodiscard]] std::int64_t den() const { return m_; }
  [[nodiscard]] double value() const { return static_cast<double>(j_) / static_cast<double>(m_); }
  /// Numerator of ||theta|| over den(): min(j, m - j).
  [[nodiscard]] std::int64_t distance_num() const { return std::min(j_, m_ - j_); }
  [[nodiscard]] double distance() const {
    return static_cast<double>(distance_num()) / static_cast<double>(m_);
  }
  [[nodiscard]] RationalAngle negated() const { return {-j_, m_}; }

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

 private:
  std::int64_t j_;
  std::int64_t m_;
};

/// e(r/m) = exp(2 pi i r/m) with r reduced mod m before the trig call.
Complex unit_root(std::int64_t r, std::int64_t m);

class TransferMatrix {
 public:
  TransferMatrix() = default;
  TransferMatrix(Complex a, Complex b, Complex c, Complex d) : m_{a, b, c, d} {}

  static TransferMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }
  /// [[1, 0], [e(theta)/2, e(-theta)/2]]
  static TransferMatrix a0(const RationalAngle& theta);
  /// [[e(theta)/2, e(-theta)/2], [0, 1]]
  static TransferMatrix a1(const RationalAngle& theta);
  static TransferMatrix digit(bool bit, const RationalAngle& theta) {
    return bit ? a1(theta) : a0(theta);
  }

  [[nodiscard]] Complex operator()(int row, int col) const { return m_[2 * row + col]; }
  /// Maximum over rows of the sum of entry moduli.
  [[nodiscard]] double row_sum_norm() const;

  friend TransferMatrix operator*(const TransferMatrix& x, const TransferMatrix& y);

 private:
  std::array<Complex, 4> m_{};
};

/// omega_t(theta) = (1 0) A_{e_0} ... A_{e_{nu-1}} (1 1)^T. Throws
/// std::domain_error for t = 0.
Complex omega_matrix(const BitWord& t, const RationalAngle& theta);

/// sum_k phi(k, t) e(k theta) from the exact spectrum.
Complex omega_direct(const Spectrum& phi_t, const RationalAngle& theta);
Complex omega_direct(const BitWord& t, const RationalAngle& theta);

enum class TriplePattern { k100, k101 };

struct NormCheck {
  double norm = 0.0;
  double bound = 0.0;
  bool ok = false;
};

/// A1 A0 A0 (pattern 100) or A1 A0 A1 (pattern 101).
TransferMatrix triple_product(TriplePattern pattern, const RationalAngle& theta);

/// Row-sum norm of the triple product against 1 - ||theta||^2 / 2.
NormCheck triple_norm_bound_check(TriplePattern pattern, const RationalAngle& theta);

/// 1 - (1/(2q)) max_j (1 - Re z_j), bounding |(1 + z_1 + ... + z_{q-1}) / q|
/// when every |z_j| <= 1. Requires z.size() == q - 1; throws
/// std::invalid_argument otherwise or when some |z_j| > 1 + 1e-12.
double delange_bound(std::span<const Complex> z, std::int64_t q);

/// |omega_t(theta)| against (1 - ||theta||^2 / 2)^M with
/// M = floor((count_blocks(t) - 1) / 2).
struct BlockBoundCheck {
  double value = 0.0;
  double bound = 0.0;
  std::int64_t M = 0;
  bool ok = false;
};
BlockBoundCheck omega_block_bound_check(const BitWord& t, const RationalAngle& theta);

/// Mass of phi(., t) on each residue class b mod m.
struct ResidueMass {
  std::int64_t m = 0;
  /// Exact masses; empty on the Fourier path.
  std::vector<Dyadic> exact;
  std::vector<double> approx;

  [[nodiscard]] bool is_exact() const { return !exact.empty(); }
};

/// Sums the exact spectrum over residue classes. Throws std::invalid_argument
/// for m < 1.
ResidueMass psi_direct(const Spectrum& phi_t, std::int64_t m);
ResidueMass psi_direct(const BitWord& t, std::int64_t m);
/// (1/m) sum_j e(-jb/m) omega_t(j/m) via omega_matrix.
ResidueMass psi_fourier(const BitWord& t, std::int64_t m);

/// |psi(b,m,t) - 1/m| <= exp(-M/(2m^2)) + 1e-9 for every b.
bool psi_estimate_check(const BitWord& t, std::int64_t m);

/// Fixed comparison constants for the floating layer.
inline constexpr double kCompareTolerance = 1e-9;
inline constexpr double kBoundSlack = 1e-12;

}  // namespace cusick
