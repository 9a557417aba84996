#pragma once

#include <string>

#include "shinlab/transforms/complex_shin.hpp"
#include "shinlab/transforms/quadrature.hpp"

namespace shinlab {

// mu_dot(t) = d mu / dt, the jump of Shin across its cut, mirrored to (1/3, 2/3).
struct DensitySample {
  Rational t;
  Real mu_dot;
};

namespace detail {

inline const Rational kThird(1, 3);
inline const Rational kTwoThirds(2, 3);

inline bool in_support(const Rational& t) { return t > kThird && t < kTwoThirds; }

// (1/pi) sin(2 pi t) (a / b)^(2t - 1) with a = t - 1/3 and b = 2/3 - t.
// This is the closed form below after |r| - r = 2|r|; a and b are passed
// separately so quadrature nodes next to either endpoint keep full accuracy.
inline Real density_kernel(const Real& t, const Real& a, const Real& b) {
  mpfr_prec_t bits = t.precision();
  Real e = t * 2 - 1;
  return sin(Real::pi(bits) * t * 2) / Real::pi(bits) * exp(e * (log(a) - log(b)));
}

}  // namespace detail

// (1/2pi) sin(2 pi t) ((3t-1)^2)^t / ((3t-2)^2)^t (|r| - r), r = (3t-2)/(3t-1),
// on (1/3, 2/3) and 0 elsewhere. sin(2 pi t)/pi stands in for 1/(Gamma(2t) Gamma(1-2t)).
inline DensitySample jump_density(const Rational& t, const Precision& p = Precision()) {
  if (t <= 0 || t >= 1) throw DomainError("jump_density requires 0 < t < 1, got " + to_string(t));
  if (!detail::in_support(t) || t == Rational(1, 2)) return {t, Real::zero(p.bits())};
  Rational r = (3 * t - 2) / (3 * t - 1);
  r.canonicalize();
  Rational bracket = abs(r) - r;
  Rational ratio = (3 * t - 1) * (3 * t - 1) / ((3 * t - 2) * (3 * t - 2));
  ratio.canonicalize();
  Real v = evaluate(p, [&](mpfr_prec_t bits) {
    Real two_pi = Real::pi(bits) * 2;
    Real power = exp(num(t, bits) * log(num(ratio, bits)));
    return sin(two_pi * num(t, bits)) / two_pi * power * num(bracket, bits);
  });
  return {t, std::move(v)};
}

// [Shin(-t - iy) - Shin(-t + iy)] / (2 pi i); the real part is returned after
// checking that the imaginary residue vanishes within rounding.
inline Real jump_density_numeric(const Rational& t, const Rational& y, const Precision& p = Precision()) {
  if (!detail::in_support(t)) throw DomainError("jump_density_numeric requires 1/3 < t < 2/3");
  if (y <= 0 || y > Rational(1, 10000)) throw DomainError("jump_density_numeric requires 0 < y <= 10^-4");
  Complex below = shin_complex(-t, -y, p), above = shin_complex(-t, y, p);
  mpfr_prec_t bits = below.precision();
  Real two_pi = Real::pi(bits) * 2;
  Complex d = below - above;
  Real value = d.im / two_pi;
  Real residue = d.re / two_pi;
  Float ten(Real::kRadiusBits), bound(Real::kRadiusBits);
  mpfr_set_ui(ten.get(), 10, MPFR_RNDN);
  mpfr_pow_si(bound.get(), ten.get(), p.tolerance_exponent(), MPFR_RNDU);
  Float mag = value.abs_upper();
  if (mpfr_cmp_ui(mag.get(), 1) > 0) mpfr_mul(bound.get(), bound.get(), mag.get(), MPFR_RNDU);
  Float res = residue.abs_lower();
  if (mpfr_cmp(res.get(), bound.get()) > 0) {
    throw CertificationFailure("imaginary residue of the jump quotient exceeds tolerance at t = " + to_string(t));
  }
  return value;
}

// Integral of f(node) * mu_dot over [a, b] inside [1/3, 2/3].
template <class G>
QuadratureResult integrate_density(G&& weight, const Rational& a, const Rational& b, const QuadratureSpec& spec,
                                   mpfr_prec_t bits) {
  Rational a_off = a - detail::kThird, b_off = detail::kTwoThirds - b;
  return tanh_sinh(
      [&](const QuadratureNode& n) {
        Real from_third = num(a_off, bits) + n.from_a;
        Real to_two_thirds = num(b_off, bits) + n.to_b;
        return detail::density_kernel(n.t, from_third, to_two_thirds) * weight(n);
      },
      a, b, spec, bits);
}

}  // namespace shinlab
