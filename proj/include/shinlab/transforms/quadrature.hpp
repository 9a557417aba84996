#pragma once

#include <cmath>
#include <string>

#include "shinlab/numerics.hpp"

namespace shinlab {

struct QuadratureSpec {
  int levels = 10;                             // finest level: step 2^-levels
  Rational target_abs_err = Rational(1, Integer("100000000000000000000"));
};

struct QuadratureResult {
  Real value;
  Real est_err;    // successive-level difference plus truncated tail
  long nodes_used = 0;
  int levels_used = 0;
  bool converged = false;
};

// One abscissa together with its distances to both endpoints, so that
// integrands singular at an endpoint never see a cancelled difference.
struct QuadratureNode {
  Real t;
  Real from_a;
  Real to_b;
};

namespace detail {

inline Real upper_as_real(const Real& x) {
  Float u = x.abs_upper();
  Float zero(Real::kRadiusBits);
  return Real::from_mid_rad(u.get(), zero.get());
}

inline Real abs_diff_upper(const Real& a, const Real& b) { return upper_as_real(a - b); }

inline Real radius_as_real(const Real& x) {
  Float zero(Real::kRadiusBits);
  return Real::from_mid_rad(x.rad(), zero.get());
}

}  // namespace detail

// Tanh-sinh rule on [a, b]: t = (a + b)/2 + (b - a)/2 tanh((pi/2) sinh u).
// Level L uses step 2^-L; each level adds the odd multiples of the step.
template <class F>
QuadratureResult tanh_sinh(F&& f, const Rational& a, const Rational& b, const QuadratureSpec& spec,
                           mpfr_prec_t bits) {
  if (!(a < b)) throw DomainError("quadrature requires a < b");
  if (spec.levels < 1 || spec.levels > 20) throw DomainError("quadrature levels must lie in 1..20");
  Real half = num((b - a) / 2, bits);
  Real half_pi = Real::pi(bits) / 2;
  Real ra = num(a, bits), rb = num(b, bits);
  // Past u_max the nodes sit within 2^(-2 bits) of an endpoint.
  double u_max = std::asinh(2.0 * static_cast<double>(bits) * std::log(2.0) / M_PI);

  auto term = [&](long k, int level) {
    Real u = Real::from_long(k, bits);
    mpfr_mul_2si(u.mid_ptr(), u.mid_ptr(), -level, MPFR_RNDN);  // exact
    Real s = half_pi * sinh(abs(u));
    Real c = cosh(s);
    Real near = half * exp(-s) / c;   // distance to the closer endpoint
    Real far = half * exp(s) / c;
    QuadratureNode node = k >= 0 ? QuadratureNode{rb - near, far, near} : QuadratureNode{ra + near, near, far};
    Real w = half * half_pi * cosh(u) / square(c);
    return w * f(node);
  };

  QuadratureResult r;
  Real sum = Real::zero(bits), prev;
  for (int level = 0; level <= spec.levels; ++level) {
    long n = static_cast<long>(std::ceil(u_max * std::ldexp(1.0, level)));
    long stride = level == 0 ? 1 : 2;
    long first = level == 0 ? -n : -n + ((n % 2 == 0) ? 1 : 0);
    Real tail = Real::zero(bits);
    for (long k = first; k <= n; k += stride) {
      Real v = term(k, level);
      sum += v;
      ++r.nodes_used;
      if (k == first || k + stride > n) tail += detail::upper_as_real(v);
    }
    Real step = Real::from_long(1, bits);
    mpfr_mul_2si(step.mid_ptr(), step.mid_ptr(), -level, MPFR_RNDN);
    Real value = sum * step;
    r.levels_used = level;
    if (level > 0) {
      r.est_err = detail::abs_diff_upper(value, prev) + tail * step;
      Real total = detail::upper_as_real(r.est_err + detail::radius_as_real(value));
      r.value = value;
      if (level >= 3 && compare_threshold(total, spec.target_abs_err) != std::partial_ordering::greater) {
        r.converged = true;
        return r;
      }
    }
    prev = value;
  }
  return r;
}

}  // namespace shinlab
