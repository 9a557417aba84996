#pragma once

#include "shinlab/numerics/real.hpp"

namespace shinlab {

// Rectangular complex ball: independent balls for the real and imaginary parts.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)), im(Real::zero(re.precision())) {}

  static Complex from_rational(const Rational& r, const Rational& i, mpfr_prec_t bits) {
    return {Real::from_rational(r, bits), Real::from_rational(i, bits)};
  }

  mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }
  bool is_real_exact() const { return im.is_exact() && mpfr_zero_p(im.mid()); }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }

inline Complex operator/(const Complex& a, const Complex& b) {
  Real den = square(b.re) + square(b.im);
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

inline Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }

inline Real norm(const Complex& z) { return square(z.re) + square(z.im); }
inline Real abs(const Complex& z) { return sqrt(norm(z)); }

inline Complex exp(const Complex& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

// Principal logarithm; the cut is the closed negative real axis.
inline Complex log(const Complex& z) {
  Real arg = atan2(z.im, z.re);
  Real mod = log(norm(z)) / 2;
  return {mod, arg};
}

}  // namespace shinlab
