#pragma once

#include <vector>

#include "shinlab/transforms/density.hpp"

namespace shinlab {

namespace detail {

inline void require_positive_x(const Rational& x, const char* what) {
  if (x <= 0) throw DomainError(std::string(what) + " requires x > 0, got " + to_string(x));
}

inline mpfr_prec_t quadrature_bits(const Precision& p) { return p.bits() + 32; }

inline QuadratureResult shifted(QuadratureResult r, const Real& base, const Real& scale) {
  r.value = base + r.value * scale;
  r.est_err = r.est_err * abs(scale);
  return r;
}

inline QuadratureResult combine(const QuadratureResult& a, const QuadratureResult& b, long sign_b) {
  QuadratureResult r;
  r.value = sign_b > 0 ? a.value + b.value : a.value - b.value;
  r.est_err = a.est_err + b.est_err;
  r.nodes_used = a.nodes_used + b.nodes_used;
  r.levels_used = std::max(a.levels_used, b.levels_used);
  r.converged = a.converged && b.converged;
  return r;
}

}  // namespace detail

// 2 + (1/2) int_{1/3}^{2/3} integrand(t) / (x + t) dt. The integrand in Gamma
// form is sin(2 pi t)/pi times the power and bracket, which is 2 mu_dot(t);
// the 1/2 in front cancels that factor, leaving 2 + int mu_dot(t) / (x + t) dt.
inline QuadratureResult stieltjes_shin(const Rational& x, const QuadratureSpec& spec = QuadratureSpec(),
                                       const Precision& p = Precision()) {
  detail::require_positive_x(x, "stieltjes_shin");
  mpfr_prec_t bits = detail::quadrature_bits(p);
  Real rx = num(x, bits);
  QuadratureResult r = integrate_density(
      [&](const QuadratureNode& n) { return Real::from_long(1, bits) / (rx + n.t); }, detail::kThird,
      detail::kTwoThirds, spec, bits);
  return detail::shifted(std::move(r), Real::from_long(2, bits), Real::from_long(1, bits));
}

// 1/2 + (1/2) int integrand'(t) x t / (t + x) dt, where integrand' swaps the
// powers of (3t-2)^2 and (3t-1)^2 and the bracket to |(3t-1)/(3t-2)| - (3t-1)/(3t-2).
// On (1/3, 2/3) that is (2/pi) sin(2 pi t) (b/a)^(2t - 1); it vanishes elsewhere.
// Killing rate a = 1/2 and drift b = 0 are fixed.
inline QuadratureResult levy_khinchin_inv_shin(const Rational& x, const QuadratureSpec& spec = QuadratureSpec(),
                                               const Precision& p = Precision()) {
  detail::require_positive_x(x, "levy_khinchin_inv_shin");
  mpfr_prec_t bits = detail::quadrature_bits(p);
  Real rx = num(x, bits);
  QuadratureResult r = tanh_sinh(
      [&](const QuadratureNode& n) {
        Real mirrored = detail::density_kernel(n.t, n.to_b, n.from_a) * 2;
        return mirrored * rx * n.t / (n.t + rx);
      },
      detail::kThird, detail::kTwoThirds, spec, bits);
  Real half = Real::from_long(1, bits) / 2;
  return detail::shifted(std::move(r), half, half);
}

// M = int |mu_dot| over (1/3, 2/3); mu_dot changes sign at 1/2.
inline QuadratureResult density_mass(const QuadratureSpec& spec = QuadratureSpec(),
                                     const Precision& p = Precision()) {
  mpfr_prec_t bits = detail::quadrature_bits(p);
  auto one = [bits](const QuadratureNode&) { return Real::from_long(1, bits); };
  Rational mid(1, 2);
  QuadratureResult left = integrate_density(one, detail::kThird, mid, spec, bits);
  QuadratureResult right = integrate_density(one, mid, detail::kTwoThirds, spec, bits);
  return detail::combine(left, right, -1);
}

struct StieltjesResidual {
  Rational x;
  QuadratureResult transform;
  Real shin;
  Real residual;  // transform - shin
};

inline std::vector<StieltjesResidual> stieltjes_residuals(const std::vector<Rational>& xs,
                                                          const QuadratureSpec& spec = QuadratureSpec(),
                                                          const Precision& p = Precision()) {
  std::vector<StieltjesResidual> out;
  for (const Rational& x : xs) {
    QuadratureResult q = stieltjes_shin(x, spec, p);
    Real s = shin(x, p).value;
    Real res = q.value - s;
    out.push_back({x, std::move(q), std::move(s), std::move(res)});
  }
  return out;
}

struct LimitReport {
  Real at_zero;          // shin_complex(0)
  Real near_zero;        // (1 + 1/(3x + 1))^(2x + 1) at x = 10^-20
  Real psi_at_zero;      // near_zero / 2
  Real at_infinity;      // shin(10^12)
  Real infinity_bound;   // 2 ((2k + 1)/(3k - omega) - log 2) at k = 10^12
};

// Both ends of the positive axis approach 2: the first-interval branch at 0+
// and the selected member as x grows.
inline LimitReport laplace_limit_check(const Precision& p = Precision()) {
  LimitReport r;
  r.at_zero = shin_complex(Complex(Real::zero(p.bits())), p).re;
  Rational eps(1, Integer("100000000000000000000"));
  r.near_zero = evaluate(p, [&](mpfr_prec_t bits) {
    return exp(num(2 * eps + 1, bits) * log1p(Real::from_long(1, bits) / num(3 * eps + 1, bits)));
  });
  r.psi_at_zero = r.near_zero / 2;
  Integer k("1000000000000");
  ShinSample s = shin(Rational(k), p);
  r.at_infinity = s.value;
  mpfr_prec_t bits = p.bits() + 32;
  r.infinity_bound = (Real::from_integer(2 * k + 1, bits) / Real::from_integer(3 * k - s.omega, bits) -
                      Real::ln2(bits)) * 2;
  return r;
}

}  // namespace shinlab
