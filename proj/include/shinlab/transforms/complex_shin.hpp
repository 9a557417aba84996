#pragma once

#include <optional>
#include <string>

#include "shinlab/shin_core.hpp"

namespace shinlab {

enum class Side { FromAbove, FromBelow };

// Position of a real point relative to the cut [-2/3, -1/3].
struct BoundaryCase {
  enum class Tag { PositiveReal, Zero, OnCut, LeftLobe, MinusOne, LeftOfMinusOne, BranchPoint };
  Tag tag;
  std::optional<Side> side;  // set only for OnCut
};

inline const char* to_string(BoundaryCase::Tag t) {
  switch (t) {
    case BoundaryCase::Tag::PositiveReal: return "PositiveReal";
    case BoundaryCase::Tag::Zero: return "Zero";
    case BoundaryCase::Tag::OnCut: return "OnCut";
    case BoundaryCase::Tag::LeftLobe: return "LeftLobe";
    case BoundaryCase::Tag::MinusOne: return "MinusOne";
    case BoundaryCase::Tag::LeftOfMinusOne: return "LeftOfMinusOne";
    case BoundaryCase::Tag::BranchPoint: return "BranchPoint";
  }
  return "?";
}

inline BoundaryCase classify(const Rational& t, Side side = Side::FromAbove) {
  using Tag = BoundaryCase::Tag;
  if (t > 0) return {Tag::PositiveReal, std::nullopt};
  if (t == 0) return {Tag::Zero, std::nullopt};
  if (t == Rational(-1)) return {Tag::MinusOne, std::nullopt};
  if (t < -1) return {Tag::LeftOfMinusOne, std::nullopt};
  if (t == Rational(-1, 3) || t == Rational(-2, 3)) return {Tag::BranchPoint, std::nullopt};
  if (t > Rational(-2, 3) && t < Rational(-1, 3)) return {Tag::OnCut, side};
  return {Tag::LeftLobe, std::nullopt};
}

namespace detail {

inline Rational to_rational(const Float& f) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), f.get());
  return q;
}

// Both parts within 10^(2 - digits) of max(|re|, |im|).
inline bool meets_precision(const Complex& z, const Precision& p) {
  Float scale = z.re.abs_lower();
  Float other = z.im.abs_lower();
  if (mpfr_cmp(other.get(), scale.get()) > 0) scale = other;
  Float tol(Real::kRadiusBits), ten(Real::kRadiusBits);
  mpfr_set_ui(ten.get(), 10, MPFR_RNDN);
  mpfr_pow_si(tol.get(), ten.get(), p.tolerance_exponent(), MPFR_RNDD);
  if (!mpfr_zero_p(scale.get())) mpfr_mul(tol.get(), tol.get(), scale.get(), MPFR_RNDD);
  return mpfr_cmp(z.re.rad(), tol.get()) <= 0 && mpfr_cmp(z.im.rad(), tol.get()) <= 0;
}

template <class F>
Complex evaluate_complex(const Precision& p, F&& f, int max_rounds = 8) {
  mpfr_prec_t extra = 16;
  for (int round = 0; round < max_rounds; ++round, extra *= 2) {
    Complex r = f(p.bits() + extra);
    if (meets_precision(r, p)) return r;
  }
  throw PrecisionExhausted("complex evaluation could not reach " + std::to_string(p.digits()) + " digits");
}

// exp((2z + 1) Log(1 + 1/(3z - m))) with the principal Log.
inline Complex member_complex(const Complex& z, const Integer& m, mpfr_prec_t bits) {
  Real one = Real::from_long(1, bits);
  Complex u{z.re * 3 - Real::from_integer(m, bits), z.im * 3};
  Complex w = Complex(one) + Complex(one) / u;
  Complex e{z.re * 2 + one, z.im * 2};
  return exp(e * log(w));
}

inline Complex exact_two(mpfr_prec_t bits) { return Complex(Real::from_long(2, bits)); }

}  // namespace detail

// Shin at a real point t.
inline Complex shin_real_axis(const Rational& t, const Precision& p = Precision()) {
  using Tag = BoundaryCase::Tag;
  switch (classify(t).tag) {
    case Tag::PositiveReal: return Complex(shin(t, p).value);
    case Tag::Zero:
    case Tag::MinusOne: return detail::exact_two(p.bits());
    case Tag::OnCut: throw BranchError("z = " + to_string(t) + " lies on the cut; use boundary_value");
    case Tag::BranchPoint: throw BranchError("z = " + to_string(t) + " is a branch point");
    case Tag::LeftLobe:
    case Tag::LeftOfMinusOne: break;
  }
  // (1 + 1/(3t + 1))^(2t + 1) with a positive rational base.
  Rational w = (3 * t + 2) / (3 * t + 1);
  w.canonicalize();
  Rational e = 2 * t + 1;
  return Complex(evaluate(p, [&](mpfr_prec_t bits) { return exp(num(e, bits) * log(num(w, bits))); }));
}

// Shin on the cut plane. Off the real axis the right half-plane uses the
// member selected by omega(Re z); the closed left half-plane uses m = -1,
// (1 + 1/(3z + 1))^(2z + 1), whose cut is [-2/3, -1/3].
inline Complex shin_complex(const Complex& z, const Precision& p = Precision()) {
  if (z.is_real_exact() && z.re.is_exact()) return shin_real_axis(z.re.mid_rational(), p);
  std::optional<int> re_sign = z.re.sign();
  if (!re_sign) throw DomainError("Re z straddles the omega discontinuity at 0");
  Integer m = -1;
  if (*re_sign > 0) {
    Rational lo = detail::to_rational(z.re.lower()), hi = detail::to_rational(z.re.upper());
    m = omega(lo, p);
    if (omega(hi, p) != m) throw DomainError("Re z straddles an omega discontinuity");
  }
  return detail::evaluate_complex(p, [&](mpfr_prec_t bits) { return detail::member_complex(z, m, bits); });
}

inline Complex shin_complex(const Rational& re, const Rational& im, const Precision& p = Precision()) {
  if (im == 0) return shin_real_axis(re, p);
  mpfr_prec_t bits = p.bits() + 64;
  return shin_complex(Complex::from_rational(re, im, bits), p);
}

// Limit of shin_complex(t + i0) from the given side for -1 <= t <= 0.
inline Complex boundary_value(const Rational& t, Side side, const Precision& p = Precision()) {
  if (t < -1 || t > 0) throw DomainError("boundary_value requires -1 <= t <= 0, got " + to_string(t));
  using Tag = BoundaryCase::Tag;
  BoundaryCase c = classify(t, side);
  if (c.tag == Tag::BranchPoint) throw BranchError("t = " + to_string(t) + " is a branch point");
  if (c.tag == Tag::Zero || c.tag == Tag::MinusOne) return detail::exact_two(p.bits());
  if (c.tag == Tag::LeftLobe) return shin_real_axis(t, p);
  Rational w = (3 * t + 2) / (3 * t + 1);
  w.canonicalize();
  Rational e = 2 * t + 1;
  // exp[(2t + 1) log|w| - k i pi (2t + 1)], k = 1 from above and -1 from below.
  long k = side == Side::FromAbove ? 1 : -1;
  Rational aw = abs(w);
  return detail::evaluate_complex(p, [&](mpfr_prec_t bits) {
    Real mod = exp(num(e, bits) * log(num(aw, bits)));
    Real phase = Real::pi(bits) * num(-k * e, bits);
    return Complex(mod * cos(phase), mod * sin(phase));
  });
}

}  // namespace shinlab
