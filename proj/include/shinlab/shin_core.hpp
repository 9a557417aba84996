#pragma once

#include <optional>
#include <string>

#include "shinlab/numerics.hpp"

namespace shinlab {

// Member m of the family S(x, m) = (1 + 1/(3x - m))^(2x + 1).
struct FamilyMember {
  Rational x;
  Integer m;
};

struct ShinSample {
  Rational x;
  Integer omega;
  Real value;
  std::optional<Rational> exact;
};

// First derivative of S(x, m) in x and the second derivative of log S(x, m).
struct DerivativeBundle {
  Real value;
  Real d1;
  Real d2log;
};

// Result of checking the minimality characterisation of omega at one point.
struct FundamentalCheck {
  Rational x;
  Integer omega;
  Real selected;                // S(x, omega), must be >= 2
  std::optional<Real> previous; // S(x, omega - 1), must be < 2 when omega >= 1
  bool holds = false;
};

namespace detail {

inline void require_positive(const Rational& x, const char* what) {
  if (x <= 0) throw DomainError(std::string(what) + " requires x > 0, got " + to_string(x));
}

inline Rational pole_distance(const FamilyMember& fm) {
  Rational u = 3 * fm.x - fm.m;
  if (u <= 0) {
    throw DomainError("S(x, m) has a pole or is undefined for 3x - m <= 0 (x = " + to_string(fm.x) +
                      ", m = " + fm.m.get_str() + ")");
  }
  return u;
}

// log S(x, m) = (2x + 1) log1p(1 / (3x - m)).
inline Real member_log(const FamilyMember& fm, mpfr_prec_t bits) {
  Rational u = pole_distance(fm);
  Rational inv = 1 / u;
  return num(2 * fm.x + 1, bits) * log1p(num(inv, bits));
}

// 3x - 1 / (2^(1/(2x+1)) - 1); omega is its ceiling.
inline Real omega_argument(const Rational& x, mpfr_prec_t bits) {
  Real a = Real::ln2(bits) / num(2 * x + 1, bits);
  return num(3 * x, bits) - Real::from_long(1, bits) / expm1(a);
}

}  // namespace detail

// Ceiling formula for the selector, with guarded rounding.
inline Integer omega(const Rational& x, const Precision& p = Precision()) {
  detail::require_positive(x, "omega");
  return guarded_ceil([&](const Precision& q) { return detail::omega_argument(x, q.bits()); }, p);
}

inline Integer omega(long k, const Precision& p = Precision()) { return omega(Rational(k), p); }

// Least m >= 0 with S(x, m) >= 2, found by scanning. The predicate is monotone
// in m, so the scan may start from any hint and walk in either direction.
inline Integer omega_oracle(const Rational& x, const Integer& hint = 0, const Precision& p = Precision(20)) {
  detail::require_positive(x, "omega_oracle");
  Integer top;
  {
    Rational three_x = 3 * x;
    mpz_cdiv_q(top.get_mpz_t(), three_x.get_num_mpz_t(), three_x.get_den_mpz_t());
    top -= 1;  // largest m with 3x - m > 0
  }
  auto reaches_two = [&](const Integer& m) {
    FamilyMember fm{x, m};
    auto gap = [&](mpfr_prec_t bits) { return detail::member_log(fm, bits) - Real::ln2(bits); };
    std::partial_ordering c = certified_compare(gap, Rational(0), p);
    if (c == std::partial_ordering::unordered) {
      throw TieUnresolved("cannot decide S(x, m) >= 2 at x = " + to_string(x) + ", m = " + m.get_str());
    }
    return c >= 0;
  };
  Integer m = hint;
  if (m < 0) m = 0;
  if (m > top) m = top;
  if (reaches_two(m)) {
    while (m > 0 && reaches_two(m - 1)) --m;
  } else {
    do ++m; while (!reaches_two(m));
  }
  return m;
}

inline Real shin_member(const FamilyMember& fm, const Precision& p = Precision()) {
  detail::pole_distance(fm);
  return evaluate(p, [&](mpfr_prec_t bits) { return exp(detail::member_log(fm, bits)); });
}

// Exact S(k) for integer k as a rational (numerator and denominator grow like k log k digits).
inline Rational shin_exact(long k, long cap = 2000) {
  if (k < 1) throw DomainError("shin_exact requires k >= 1");
  if (k > cap) throw DomainError("shin_exact is capped at k <= " + std::to_string(cap));
  Integer om = omega(k);
  Integer den = 3 * Integer(k) - om;
  Integer num_base = den + 1;
  Integer a, b;
  unsigned long e = static_cast<unsigned long>(2 * k + 1);
  mpz_pow_ui(a.get_mpz_t(), num_base.get_mpz_t(), e);
  mpz_pow_ui(b.get_mpz_t(), den.get_mpz_t(), e);
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// S(x) = S(x, omega(x)); the value is certified to exceed 2.
inline ShinSample shin(const Rational& x, const Precision& p = Precision()) {
  detail::require_positive(x, "shin");
  Integer om = omega(x, p);
  FamilyMember fm{x, om};
  Real value = shin_member(fm, p);
  auto log_gap = [&](mpfr_prec_t bits) { return detail::member_log(fm, bits) - Real::ln2(bits); };
  if (certified_compare(log_gap, Rational(0), p) != std::partial_ordering::greater) {
    throw CertificationFailure("S(x) > 2 could not be certified at x = " + to_string(x));
  }
  ShinSample s{x, om, std::move(value), std::nullopt};
  if (x.get_den() == 1 && x <= 64) s.exact = shin_exact(x.get_num().get_si());
  return s;
}

inline ShinSample shin(long k, const Precision& p = Precision()) { return shin(Rational(k), p); }

// (1 + 1/D)^(2n+1) with D = floor(1 / (2^(1/(2n+1)) - 1)).
inline Real shin_seq(long n, const Precision& p = Precision()) {
  if (n < 1) throw DomainError("shin_seq requires n >= 1");
  Integer d = guarded_floor(
      [&](const Precision& q) {
        mpfr_prec_t bits = q.bits();
        return Real::from_long(1, bits) / expm1(Real::ln2(bits) / Real::from_long(2 * n + 1, bits));
      },
      p);
  Rational inv(1, d);
  return evaluate(p, [&](mpfr_prec_t bits) {
    return exp(Real::from_long(2 * n + 1, bits) * log1p(num(inv, bits)));
  });
}

inline DerivativeBundle derivatives(const FamilyMember& fm, const Precision& p = Precision()) {
  Rational u = detail::pole_distance(fm);
  Real value = shin_member(fm, p);
  // S' = S [2 log1p(1/u) - 3(2x+1) / (u(u+1))]
  Rational tail = 3 * (2 * fm.x + 1) / (u * (u + 1));
  Real d1 = evaluate(p, [&](mpfr_prec_t bits) {
    Real s = exp(detail::member_log(fm, bits));
    return s * (2 * log1p(num(1 / u, bits)) - num(tail, bits));
  });
  // (log S)'' = [12 m u + 12 u + 6 m + 9] / (u^2 (u+1)^2), a rational function of x.
  Rational m(fm.m);
  Rational d2 = (12 * m * u + 12 * u + 6 * m + 9) / (u * u * (u + 1) * (u + 1));
  d2.canonicalize();
  return {std::move(value), std::move(d1), num(d2, p.bits())};
}

// Checks S(x, omega) >= 2 and, for omega >= 1, S(x, omega - 1) < 2. Comparisons
// escalate up to cap_factor times the requested digits.
inline FundamentalCheck check_fundamental(const Rational& x, const Precision& p = Precision(), int cap_factor = 16) {
  detail::require_positive(x, "check_fundamental");
  FundamentalCheck c{x, omega(x, p), Real(), std::nullopt, false};
  auto gap_for = [&](const Integer& m) {
    return [&x, m](mpfr_prec_t bits) { return detail::member_log({x, m}, bits) - Real::ln2(bits); };
  };
  c.selected = shin_member({x, c.omega}, p);
  bool upper_ok = certified_compare(gap_for(c.omega), Rational(0), p, cap_factor) >= 0;
  bool lower_ok = true;
  if (c.omega >= 1) {
    Integer prev = c.omega - 1;
    c.previous = shin_member({x, prev}, p);
    lower_ok = certified_compare(gap_for(prev), Rational(0), p, cap_factor) == std::partial_ordering::less;
  }
  c.holds = upper_ok && lower_ok;
  return c;
}

}  // namespace shinlab
