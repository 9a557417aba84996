#pragma once

#include <string>
#include <vector>

#include "shinlab/shin_core.hpp"

namespace shinlab {

// Function under test: a fixed family member, or a tag built on Shin.
struct CMTarget {
  enum class Kind { Member, Shin, InvShin, XTimesShin };
  Kind kind = Kind::Member;
  Integer m = 0;

  static CMTarget member(const Integer& m) { return {Kind::Member, m}; }
  static CMTarget shin() { return {Kind::Shin, 0}; }
  static CMTarget inv_shin() { return {Kind::InvShin, 0}; }
  static CMTarget x_times_shin() { return {Kind::XTimesShin, 0}; }

  // Completely monotonic targets need (-1)^n D^n f >= 0; Bernstein targets need
  // f >= 0 and (-1)^(n-1) D^n f >= 0 for n >= 1.
  bool bernstein() const { return kind == Kind::InvShin || kind == Kind::XTimesShin; }
};

inline std::string to_string(const CMTarget& t) {
  switch (t.kind) {
    case CMTarget::Kind::Member: return "member(m=" + t.m.get_str() + ")";
    case CMTarget::Kind::Shin: return "shin";
    case CMTarget::Kind::InvShin: return "inv_shin";
    case CMTarget::Kind::XTimesShin: return "x_times_shin";
  }
  return "?";
}

struct CMViolation {
  int order;
  Rational point;
  Real value;  // the signed finite difference (-1)^n D^n f or (-1)^(n-1) D^n f
};

struct CMReport {
  CMTarget target;
  Rational lo, hi;
  int max_order = 0;
  Rational step;
  std::vector<CMViolation> violations;   // whole ball below zero
  std::vector<CMViolation> uncertified;  // ball still straddles zero at the digit cap
  int digits_used = 0;
  bool clean() const { return violations.empty() && uncertified.empty(); }
};

namespace detail {

inline Real cm_value(const CMTarget& t, const Integer& m, const Rational& x, mpfr_prec_t bits) {
  Real s = exp(member_log({x, m}, bits));
  switch (t.kind) {
    case CMTarget::Kind::Member:
    case CMTarget::Kind::Shin: return s;
    case CMTarget::Kind::InvShin: return Real::from_long(1, bits) / s;
    case CMTarget::Kind::XTimesShin: return num(x, bits) * s;
  }
  return s;
}

}  // namespace detail

// Sign test of forward differences D^n f(x_j) = sum_i (-1)^(n-i) C(n,i) f(x_j + i h)
// on the exact grid x_j = lo + j h inside [lo, hi], n = 0..max_order. A point
// whose ball straddles zero is recomputed at doubled digits up to 8x.
inline CMReport cm_test(const CMTarget& target, const Rational& lo, const Rational& hi, int max_order,
                        const Rational& step, const Precision& p = Precision(30)) {
  if (max_order < 0 || max_order > 8) throw DomainError("cm_test requires 0 <= max_order <= 8");
  if (step <= 0) throw DomainError("cm_test requires a positive step");
  if (lo <= 0 || hi <= lo) throw DomainError("cm_test requires 0 < lo < hi");
  Integer m = target.m;
  if (target.kind != CMTarget::Kind::Member) {
    m = omega(lo);
    if (omega(hi) != m) {
      throw DomainError("interval [" + to_string(lo) + ", " + to_string(hi) + "] straddles an omega discontinuity");
    }
  }
  detail::pole_distance({lo, m});
  Rational span = (hi - lo) / step;
  Integer n_steps;
  mpz_fdiv_q(n_steps.get_mpz_t(), span.get_num_mpz_t(), span.get_den_mpz_t());
  if (n_steps < max_order) throw DomainError("grid has fewer points than the highest order needs");
  long count = n_steps.get_si() + 1;

  CMReport report{target, lo, hi, max_order, step, {}, {}, p.digits()};
  auto grid = [&](long j) { return Rational(lo + j * step); };

  auto signed_difference = [&](int n, long j, mpfr_prec_t bits) {
    Real d = Real::zero(bits);
    Integer c = 1;
    for (int i = 0; i <= n; ++i) {
      Real term = detail::cm_value(target, m, grid(j + i), bits) * Real::from_integer(c, bits);
      d = ((n - i) % 2 == 0) ? d + term : d - term;
      c = c * (n - i) / (i + 1);
    }
    bool flip = target.bernstein() ? (n >= 1 && (n - 1) % 2 == 1) : (n % 2 == 1);
    return flip ? -d : d;
  };

  for (int n = 0; n <= max_order; ++n) {
    for (long j = 0; j + n < count; ++j) {
      int digits = p.digits();
      Real v = signed_difference(n, j, bits_for_digits(digits));
      while (!v.sign().has_value() && digits < 8 * p.digits()) {
        digits *= 2;
        v = signed_difference(n, j, bits_for_digits(digits));
      }
      report.digits_used = std::max(report.digits_used, digits);
      std::optional<int> s = v.sign();
      if (!s) {
        report.uncertified.push_back({n, grid(j), std::move(v)});
      } else if (*s < 0) {
        report.violations.push_back({n, grid(j), std::move(v)});
      }
    }
  }
  return report;
}

}  // namespace shinlab
