#include "cusick/fourier.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace cusick {

RationalAngle::RationalAngle(std::int64_t j, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("angle denominator must be positive");
  j %= m;
  if (j < 0) j += m;
  const std::int64_t g = std::gcd(j, m);
  j_ = j / g;
  m_ = m / g;
}

Complex unit_root(std::int64_t r, std::int64_t m) {
  r %= m;
  if (r < 0) r += m;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == m) return {-1.0, 0.0};
  const double x = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
  return {std::cos(x), std::sin(x)};
}

TransferMatrix TransferMatrix::a0(const RationalAngle& theta) {
  const Complex e = unit_root(theta.num(), theta.den());
  return {1.0, 0.0, e / 2.0, std::conj(e) / 2.0};
}

TransferMatrix TransferMatrix::a1(const RationalAngle& theta) {
  const Complex e = unit_root(theta.num(), theta.den());
  return {e / 2.0, std::conj(e) / 2.0, 0.0, 1.0};
}

double TransferMatrix::row_sum_norm() const {
  return std::max(std::abs(m_[0]) + std::abs(m_[1]), std::abs(m_[2]) + std::abs(m_[3]));
}

TransferMatrix operator*(const TransferMatrix& x, const TransferMatrix& y) {
  return {x.m_[0] * y.m_[0] + x.m_[1] * y.m_[2], x.m_[0] * y.m_[1] + x.m_[1] * y.m_[3],
          x.m_[2] * y.m_[0] + x.m_[3] * y.m_[2], x.m_[2] * y.m_[1] + x.m_[3] * y.m_[3]};
}

Complex omega_matrix(const BitWord& t, const RationalAngle& theta) {
  if (t.is_zero()) throw std::domain_error("omega is defined for t >= 1");
  const TransferMatrix a[2] = {TransferMatrix::a0(theta), TransferMatrix::a1(theta)};
  // row vector (1 0) times the product, left to right from the lowest digit
  Complex x = 1.0;
  Complex y = 0.0;
  const std::size_t nu = t.bit_length() - 1;
  for (std::size_t j = 0; j < nu; ++j) {
    const TransferMatrix& m = a[t.bit(j) ? 1 : 0];
    const Complex nx = x * m(0, 0) + y * m(1, 0);
    const Complex ny = x * m(0, 1) + y * m(1, 1);
    x = nx;
    y = ny;
  }
  return x + y;
}

Complex omega_direct(const Spectrum& phi_t, const RationalAngle& theta) {
  Complex sum = 0.0;
  const std::int64_t m = theta.den();
  for (const auto& [k, v] : phi_t.entries()) {
    // k * j mod m without overflow for |k| < 2^62 / m
    const std::int64_t r = ((k % m) * theta.num()) % m;
    sum += v.to_double() * unit_root(r, m);
  }
  return sum;
}

Complex omega_direct(const BitWord& t, const RationalAngle& theta) {
  return omega_direct(phi(t), theta);
}

TransferMatrix triple_product(TriplePattern pattern, const RationalAngle& theta) {
  const TransferMatrix a0 = TransferMatrix::a0(theta);
  const TransferMatrix a1 = TransferMatrix::a1(theta);
  return pattern == TriplePattern::k100 ? a1 * a0 * a0 : a1 * a0 * a1;
}

NormCheck triple_norm_bound_check(TriplePattern pattern, const RationalAngle& theta) {
  NormCheck out;
  out.norm = triple_product(pattern, theta).row_sum_norm();
  const double d = theta.distance();
  out.bound = 1.0 - 0.5 * d * d;
  out.ok = out.norm <= out.bound + kBoundSlack;
  return out;
}

double delange_bound(std::span<const Complex> z, std::int64_t q) {
  if (q < 1 || z.size() != static_cast<std::size_t>(q - 1)) {
    throw std::invalid_argument("delange_bound needs exactly q - 1 points");
  }
  double worst = 0.0;
  for (const Complex& w : z) {
    if (std::abs(w) > 1.0 + kBoundSlack) {
      throw std::invalid_argument("delange_bound needs |z_j| <= 1");
    }
    worst = std::max(worst, 1.0 - w.real());
  }
  return 1.0 - worst / (2.0 * static_cast<double>(q));
}

BlockBoundCheck omega_block_bound_check(const BitWord& t, const RationalAngle& theta) {
  BlockBoundCheck out;
  const std::size_t blocks = count_blocks(t);
  out.M = blocks == 0 ? 0 : static_cast<std::int64_t>((blocks - 1) / 2);
  out.value = std::abs(omega_matrix(t, theta));
  const double d = theta.distance();
  out.bound = std::pow(1.0 - 0.5 * d * d, static_cast<double>(out.M));
  out.ok = out.value <= out.bound + kCompareTolerance;
  return out;
}

ResidueMass psi_direct(const Spectrum& phi_t, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  ResidueMass out;
  out.m = m;
  out.exact.assign(static_cast<std::size_t>(m), Dyadic());
  for (const auto& [k, v] : phi_t.entries()) {
    std::int64_t b = k % m;
    if (b < 0) b += m;
    out.exact[static_cast<std::size_t>(b)] += v;
  }
  out.approx.reserve(out.exact.size());
  for (const Dyadic& v : out.exact) out.approx.push_back(v.to_double());
  return out;
}

ResidueMass psi_direct(const BitWord& t, std::int64_t m) { return psi_direct(phi(t), m); }

ResidueMass psi_fourier(const BitWord& t, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  std::vector<Complex> omega(static_cast<std::size_t>(m));
  for (std::int64_t j = 0; j < m; ++j) omega[j] = omega_matrix(t, RationalAngle(j, m));
  ResidueMass out;
  out.m = m;
  out.approx.resize(static_cast<std::size_t>(m));
  for (std::int64_t b = 0; b < m; ++b) {
    Complex sum = 0.0;
    for (std::int64_t j = 0; j < m; ++j) sum += unit_root(-((j * b) % m), m) * omega[j];
    out.approx[b] = sum.real() / static_cast<double>(m);
  }
  return out;
}

bool psi_estimate_check(const BitWord& t, std::int64_t m) {
  const ResidueMass psi = psi_direct(t, m);
  const std::size_t blocks = count_blocks(t);
  const double M = blocks == 0 ? 0.0 : static_cast<double>((blocks - 1) / 2);
  const double md = static_cast<double>(m);
  const double bound = std::exp(-M / (2.0 * md * md)) + kCompareTolerance;
  for (const Dyadic& v : psi.exact) {
    // m psi - 1 is exact, so the only rounding is the final division
    const double dev = (v * Dyadic(static_cast<long>(m)) - Dyadic(1)).to_double() / md;
    if (std::abs(dev) > bound) return false;
  }
  return true;
}

}  // namespace cusick
