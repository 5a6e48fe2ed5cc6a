#include "cusick/bounds.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "cusick/fourier.hpp"

namespace cusick {

namespace {

// shortest round-trip decimal of x, as an exact rational
mpq_class decimal_value(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  const std::string text(buf, res.ptr);
  const auto e_pos = text.find('e');
  std::string mantissa = text.substr(0, e_pos);
  long exponent = e_pos == std::string::npos ? 0 : std::stol(text.substr(e_pos + 1));
  if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  mpq_class q(mpz_class(mantissa, 10));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    q /= scale;
  } else {
    q *= scale;
  }
  q.canonicalize();
  return q;
}

mpq_class to_mpq(const Dyadic& d) {
  mpq_class q(d.numerator());
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(d.exponent()));
  q /= den;
  q.canonicalize();
  return q;
}

}  // namespace

Dyadic weight(std::int64_t l) { return Dyadic::one_minus_pow2((l < 0 ? -l : l) + 2); }

Dyadic weight_tilde(std::int64_t l) {
  if (l == 0) return Dyadic(3).halve();
  if (l == 1 || l == -1) return Dyadic(11).scale_pow2(-3);
  return weight(l);
}

Dyadic min_weight(std::int64_t b, std::int64_t m) {
  if (m < 1 || b < 0 || b >= m) throw std::invalid_argument("min_weight needs 0 <= b < m");
  return 2 * b < m ? Dyadic::one_minus_pow2(b + 2) : Dyadic::one_minus_pow2(m - b + 2);
}

Dyadic min_weight_sum(std::int64_t m) {
  Dyadic sum;
  for (std::int64_t b = 0; b < m; ++b) sum += min_weight(b, m);
  return sum;
}

Dyadic mean_weight_lower_bound(std::int64_t m, std::int64_t N) {
  if (N < 1 || N > m) throw std::invalid_argument("mean_weight_lower_bound needs 1 <= N <= m");
  return Dyadic(static_cast<long>(m)) * Dyadic::one_minus_pow2(N + 2) -
         Dyadic(static_cast<long>(2 * N));
}

Dyadic pair_lower_bound_via_residues(const Spectrum& phi_t, std::int64_t m) {
  const ResidueMass psi = psi_direct(phi_t, m);
  Dyadic sum;
  for (std::int64_t b = 0; b < m; ++b) sum += psi.exact[b] * min_weight(b, m);
  return sum;
}

Dyadic pair_lower_bound_via_residues(const BitWord& t, std::int64_t m) {
  return pair_lower_bound_via_residues(phi(t), m);
}

std::array<double, 3> BoundParams::error_terms() const {
  const long double md = m;
  return {std::ldexp(1.0, static_cast<int>(-N - 2)),
          static_cast<double>(2.0L * N / md),
          static_cast<double>(md * std::exp(-static_cast<long double>(M) / (2.0L * md * md)))};
}

BoundParams params_for(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  BoundParams p;
  p.epsilon = epsilon;

  const mpq_class exact_eps = decimal_value(epsilon);

  // floor(-log2 eps) is the largest n with eps * 2^n <= 1
  std::int64_t n = 0;
  mpq_class scaled = exact_eps * 2;
  while (scaled <= 1) {
    ++n;
    scaled *= 2;
  }
  p.N = n + 1;

  const mpq_class ratio = mpq_class(6 * p.N) / exact_eps;
  const mpz_class q = ratio.get_num() / ratio.get_den();
  if (!q.fits_slong_p()) throw std::overflow_error("modulus m out of range");
  p.m = q.get_si() + 1;

  const long double md = p.m;
  const long double eps = epsilon;
  const long double x = -2.0L * md * md * std::log(eps / (3.0L * md));
  p.M = static_cast<std::int64_t>(std::floor(x)) + 1;
  // +1 retry at integer boundaries
  while (md * std::exp(-static_cast<long double>(p.M) / (2.0L * md * md)) >= eps / 3.0L) ++p.M;
  p.C = 2 * p.M + 1;

  mpq_class first(1);
  for (std::int64_t i = 0; i < p.N + 2; ++i) first /= 2;
  const mpq_class second = mpq_class(2 * p.N) / mpq_class(p.m);
  const auto terms = p.error_terms();
  if (!(first < exact_eps / 3) || !(second < exact_eps / 3) || !(terms[2] < epsilon / 3.0)) {
    throw std::logic_error("an error term is not below epsilon/3");
  }
  return p;
}

double theorem_lower_bound(const BoundParams& p) {
  const auto terms = p.error_terms();
  return 1.0 - terms[0] - terms[1] - terms[2];
}

TheoremReport verify_main_theorem(const BitWord& t, double epsilon) {
  if (t.is_zero()) throw std::domain_error("the theorem concerns t >= 1");
  TheoremReport r;
  r.params = params_for(epsilon);
  r.t = t;
  r.blocks = count_blocks(t);
  r.hypothesis_met = static_cast<std::int64_t>(r.blocks) >= r.params.C;

  const Spectrum phi_t = phi(t);
  r.pair = pair_sum(phi_t, phi(reflect(t)));
  r.floor_holds = r.pair.sum >= Dyadic(15).scale_pow2(-4);
  r.residue_bound = pair_lower_bound_via_residues(phi_t, r.params.m);
  if (r.hypothesis_met) {
    r.inequality_holds = to_mpq(r.pair.sum) > 1 - decimal_value(epsilon);
  }
  return r;
}

}  // namespace cusick
