#pragma once

#include <cmath>
#include <mutex>
#include <vector>

#include "shinlab/eulerian.hpp"
#include "shinlab/numerics.hpp"

namespace shinlab {

// Bernoulli numbers B_m (B_1 = -1/2), cached.
inline Rational bernoulli(long m) {
  if (m < 0) throw DomainError("bernoulli requires m >= 0");
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long>(cache.size()) <= m) {
    long n = static_cast<long>(cache.size());
    Rational b = 0;
    if (n == 1 || n % 2 == 0) {
      for (long j = 0; j < n; ++j) b += Rational(binom(n + 1, j)) * cache[static_cast<std::size_t>(j)];
      b = -b / (n + 1);
      b.canonicalize();
    }
    cache.push_back(b);
  }
  return cache[static_cast<std::size_t>(m)];
}

namespace detail {

// Shift point for the asymptotic series: the smallest Stirling term near
// k = pi z is about exp(-2 pi z), so z >= 0.12 bits is more than enough.
inline long stirling_threshold(mpfr_prec_t bits) { return static_cast<long>(0.12 * bits) + 2; }

inline void require_positive_ball(const Real& x, const char* what) {
  if (mpfr_sgn(x.lower().get()) <= 0) {
    throw DomainError(std::string(what) + " requires x > 0");
  }
}

inline long shift_count(const Real& x, mpfr_prec_t bits) {
  double lead = x.to_double();
  long z0 = stirling_threshold(bits);
  return lead >= static_cast<double>(z0) ? 0 : static_cast<long>(std::ceil(z0 - lead));
}

// Sums sum_{k>=1} B_2k / (c(k) z^(2k - d)) and adds the first omitted term
// as the remainder bound. Used by both the Stirling and the digamma series.
template <class Denominator>
Real asymptotic_tail(const Real& z, mpfr_prec_t bits, int d, Denominator den) {
  Real zsq = z * z;
  Real zpow = d == 1 ? z : zsq;  // z^(2k - d) at k = 1
  Real sum = Real::zero(bits);
  Float eps(Real::kRadiusBits);
  mpfr_set_ui_2exp(eps.get(), 1, -(bits + 8), MPFR_RNDU);
  long k_max = 4 * stirling_threshold(bits);
  for (long k = 1;; ++k) {
    Real term = num(bernoulli(2 * k) / den(k), bits) / zpow;
    if (k > k_max || mpfr_cmp(term.abs_upper().get(), eps.get()) < 0) {
      sum.inflate(term);
      return sum;
    }
    sum += term;
    zpow *= zsq;
  }
}

inline Real log_gamma_shifted(const Real& z, mpfr_prec_t bits) {
  // (z - 1/2) log z - z + log(2 pi) / 2 + sum B_2k / (2k (2k-1) z^(2k-1))
  Real half = num(Rational(1, 2), bits);
  Real log2pi = log(Real::pi(bits) * 2);
  Real main = (z - half) * log(z) - z + log2pi * half;
  return main + asymptotic_tail(z, bits, 1, [](long k) { return Rational(2 * k * (2 * k - 1)); });
}

}  // namespace detail

// log Gamma(x) for x > 0 at working precision bits.
inline Real log_gamma_ball(const Real& x, mpfr_prec_t bits) {
  detail::require_positive_ball(x, "log_gamma");
  long s = detail::shift_count(x, bits);
  Real prod = Real::from_long(1, bits);
  for (long j = 0; j < s; ++j) prod *= x + Real::from_long(j, bits);
  Real z = x + Real::from_long(s, bits);
  return detail::log_gamma_shifted(z, bits) - log(prod);
}

inline Real gamma_ball(const Real& x, mpfr_prec_t bits) {
  detail::require_positive_ball(x, "gamma");
  long s = detail::shift_count(x, bits);
  Real prod = Real::from_long(1, bits);
  for (long j = 0; j < s; ++j) prod *= x + Real::from_long(j, bits);
  Real z = x + Real::from_long(s, bits);
  return exp(detail::log_gamma_shifted(z, bits)) / prod;
}

// psi(x) = log z - 1/(2z) - sum B_2k / (2k z^2k) - sum_{j<s} 1/(x+j), z = x + s.
inline Real digamma_ball(const Real& x, mpfr_prec_t bits) {
  detail::require_positive_ball(x, "digamma");
  long s = detail::shift_count(x, bits);
  Real back = Real::zero(bits);
  for (long j = 0; j < s; ++j) back += Real::from_long(1, bits) / (x + Real::from_long(j, bits));
  Real z = x + Real::from_long(s, bits);
  Real series = detail::asymptotic_tail(z, bits, 0, [](long k) { return Rational(2 * k); });
  return log(z) - Real::from_long(1, bits) / (z * 2) - series - back;
}

// The Real overloads take x as given; its radius limits the attainable accuracy.
inline Real gamma(const Real& x, const Precision& p = Precision()) {
  return evaluate(p, [&](mpfr_prec_t bits) { return gamma_ball(x, bits); });
}

inline Real gamma(const Rational& x, const Precision& p = Precision()) {
  return evaluate(p, [&](mpfr_prec_t bits) { return gamma_ball(num(x, bits), bits); });
}

inline Real digamma(const Real& x, const Precision& p = Precision()) {
  return evaluate(p, [&](mpfr_prec_t bits) { return digamma_ball(x, bits); });
}

inline Real digamma(const Rational& x, const Precision& p = Precision()) {
  return evaluate(p, [&](mpfr_prec_t bits) { return digamma_ball(num(x, bits), bits); });
}

}  // namespace shinlab
