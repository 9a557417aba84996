#pragma once

#include <optional>
#include <string>

#include "shinlab/gamma.hpp"

namespace shinlab {

struct IdentityReport {
  enum class Mode { Relative, Absolute };

  std::string name;
  long n = 0;
  Real lhs;
  Real rhs;
  Real abs_err;
  Real rel_err;
  Real tolerance;
  Mode mode = Mode::Relative;
  bool passed = false;
};

struct VanishingProduct {
  long n = 0;
  Real P_n;
  Real bound;        // exp(-(b_1 + ... + b_n))
  Real gamma_ratio;  // Gamma(n+1) Gamma(1+a) / Gamma(n+1+a), a = log 2 / 2
  bool holds = false;
};

struct SweepResult {
  long n_max = 0;
  long checked = 0;
  std::optional<long> first_violation;
  VanishingProduct last;
};

namespace detail {

inline Real half_log2(mpfr_prec_t bits) { return Real::ln2(bits) / 2; }

inline void require_n(long n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + " requires n >= 1");
}

inline Real ten_pow(long e, mpfr_prec_t bits) {
  return exp(Real::from_long(e, bits) * log(Real::from_long(10, bits)));
}

// Fills abs_err, rel_err and passed from lhs, rhs and tolerance.
inline IdentityReport finish(IdentityReport r) {
  r.abs_err = abs(r.lhs - r.rhs);
  Real denom = abs(r.rhs);
  r.rel_err = denom.contains_zero() ? r.abs_err : r.abs_err / denom;
  const Real& err = r.mode == IdentityReport::Mode::Relative ? r.rel_err : r.abs_err;
  r.passed = mpfr_cmp(err.upper().get(), r.tolerance.lower().get()) <= 0;
  return r;
}

}  // namespace detail

// prod_{k=1..n} (1 + log 2 / (2k)) against Gamma(n+1+a) / (Gamma(n+1) Gamma(1+a)).
inline IdentityReport product_identity(long n, const Precision& p = Precision()) {
  detail::require_n(n, "product_identity");
  mpfr_prec_t bits = p.bits() + 32;
  Real a = detail::half_log2(bits);
  Real lhs = Real::from_long(1, bits);
  for (long k = 1; k <= n; ++k) lhs *= Real::from_long(1, bits) + a / Real::from_long(k, bits);
  Real one = Real::from_long(1, bits);
  Real rhs = gamma_ball(Real::from_long(n + 1, bits) + a, bits) /
             (gamma_ball(Real::from_long(n + 1, bits), bits) * gamma_ball(one + a, bits));
  IdentityReport r{"product", n, std::move(lhs), std::move(rhs), {}, {}, detail::ten_pow(10 - p.digits(), bits)};
  return detail::finish(std::move(r));
}

// sum_{k=1..n} log 2 / (2k + log 2) against a [psi(n+1+a) - psi(1+a)].
inline IdentityReport partial_sum_identity(long n, const Precision& p = Precision()) {
  detail::require_n(n, "partial_sum_identity");
  mpfr_prec_t bits = p.bits() + 32;
  Real l2 = Real::ln2(bits);
  Real a = l2 / 2;
  Real lhs = Real::zero(bits);
  for (long k = 1; k <= n; ++k) lhs += l2 / (Real::from_long(2 * k, bits) + l2);
  Real rhs = a * (digamma_ball(Real::from_long(n + 1, bits) + a, bits) -
                  digamma_ball(Real::from_long(1, bits) + a, bits));
  IdentityReport r{"partial_sum", n, std::move(lhs), std::move(rhs), {}, {}, detail::ten_pow(10 - p.digits(), bits)};
  return detail::finish(std::move(r));
}

// P_n = prod_{k=1..n} (1 - b_k) with b_k = log 2 / (2k + log 2).
inline VanishingProduct vanishing_product(long n, const Precision& p = Precision()) {
  detail::require_n(n, "vanishing_product");
  mpfr_prec_t bits = p.bits() + 32;
  Real l2 = Real::ln2(bits);
  Real a = l2 / 2;
  Real prod = Real::from_long(1, bits), sum = Real::zero(bits);
  for (long k = 1; k <= n; ++k) {
    Real b = l2 / (Real::from_long(2 * k, bits) + l2);
    prod *= Real::from_long(1, bits) - b;
    sum += b;
  }
  Real bound = exp(-sum);
  Real ratio = gamma_ball(Real::from_long(n + 1, bits), bits) * gamma_ball(Real::from_long(1, bits) + a, bits) /
               gamma_ball(Real::from_long(n + 1, bits) + a, bits);
  bool positive = prod.sign() == 1;
  bool below = compare_threshold(bound - prod, Rational(0)) == std::partial_ordering::greater;
  return {n, std::move(prod), std::move(bound), std::move(ratio), positive && below};
}

// Checks 0 < P_n <= exp(-sum b_k) for every n in 1..n_max with running products.
inline SweepResult vanishing_product_sweep(long n_max, const Precision& p = Precision()) {
  detail::require_n(n_max, "vanishing_product_sweep");
  mpfr_prec_t bits = p.bits() + 32;
  Real l2 = Real::ln2(bits);
  Real prod = Real::from_long(1, bits), sum = Real::zero(bits);
  SweepResult out;
  out.n_max = n_max;
  for (long k = 1; k <= n_max; ++k) {
    Real b = l2 / (Real::from_long(2 * k, bits) + l2);
    prod *= Real::from_long(1, bits) - b;
    sum += b;
    bool ok = prod.sign() == 1 &&
              compare_threshold(exp(-sum) - prod, Rational(0)) == std::partial_ordering::greater;
    ++out.checked;
    if (!ok && !out.first_violation) out.first_violation = k;
  }
  out.last = vanishing_product(n_max, p);
  return out;
}

// Gamma(1+n) Gamma(1+a) / Gamma(1+n+a) against the unit-argument series
// sum_r a (1-a)(2-a)...(r-a) / (r! (1+n+r)), all of whose terms are positive.
// With c_r = (1-a)...(r-a)/r!, a c_r / (r+1) = c_r - c_(r+1), so the tail past
// r = R lies in [c_(R+1) (R+2)/(R+2+n), c_(R+1)]. The rhs is the partial sum
// plus the midpoint of that range, the tolerance is its half-width.
inline IdentityReport gauss_unit_value(long n, long terms, const Precision& p = Precision()) {
  detail::require_n(n, "gauss_unit_value");
  if (terms < 10) throw DomainError("gauss_unit_value requires terms >= 10");
  mpfr_prec_t bits = p.bits() + 32;
  Real a = detail::half_log2(bits);
  Real one = Real::from_long(1, bits);
  Real lhs = gamma_ball(Real::from_long(n + 1, bits), bits) * gamma_ball(one + a, bits) /
             gamma_ball(Real::from_long(n + 1, bits) + a, bits);
  Real c = one, sum = Real::zero(bits);
  for (long r = 0; r <= terms; ++r) {
    sum += a * c / Real::from_long(1 + n + r, bits);
    c = c * (Real::from_long(r + 1, bits) - a) / Real::from_long(r + 1, bits);
  }
  // c now holds c_(terms+1).
  Real hi = c;
  Real lo = c * Real::from_long(terms + 2, bits) / Real::from_long(terms + 2 + n, bits);
  Real rhs = sum + (hi + lo) / 2;
  Real half_width = (hi - lo) / 2;
  // Tolerance: tail half-width plus the rounding radii of both sides.
  Float tol = half_width.upper();
  mpfr_add(tol.get(), tol.get(), lhs.rad(), MPFR_RNDU);
  mpfr_add(tol.get(), tol.get(), rhs.rad(), MPFR_RNDU);
  Real tolerance = Real::from_mid_rad(tol.get(), Real::zero(64).rad());
  IdentityReport rep{"gauss_unit_value", n, std::move(lhs), std::move(rhs), {}, {}, std::move(tolerance),
                     IdentityReport::Mode::Absolute};
  return detail::finish(std::move(rep));
}

// Least n with sum_{k<=n} log 2 / (2k + log 2) > threshold, or -1 if none up to n_limit.
inline long divergence_witness(const Rational& threshold, long n_limit) {
  constexpr mpfr_prec_t bits = 128;
  Real l2 = Real::ln2(bits);
  Real sum = Real::zero(bits);
  for (long k = 1; k <= n_limit; ++k) {
    sum += l2 / (Real::from_long(2 * k, bits) + l2);
    auto c = compare_threshold(sum, threshold);
    if (c == std::partial_ordering::unordered) throw PrecisionExhausted("partial sum too close to threshold");
    if (c == std::partial_ordering::greater) return k;
  }
  return -1;
}

}  // namespace shinlab
