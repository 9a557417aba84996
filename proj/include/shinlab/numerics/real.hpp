#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <optional>
#include <utility>

#include "shinlab/numerics/errors.hpp"

namespace shinlab {

using Integer = mpz_class;
using Rational = mpq_class;

// Owning RAII handle for one mpfr_t.
class Float {
 public:
  explicit Float(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Float(const Float& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Float(Float&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Float& operator=(const Float& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Float& operator=(Float&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Float() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

// Midpoint-radius ball: the true value lies in [mid - rad, mid + rad].
// The midpoint carries the working precision, the radius is a short float
// that is only ever rounded upward.
class Real {
 public:
  static constexpr mpfr_prec_t kRadiusBits = 32;
  static constexpr mpfr_prec_t kMinBits = 64;

  Real() : mid_(kMinBits), rad_(kRadiusBits) {}

  static Real zero(mpfr_prec_t prec) { return Real(prec); }

  static Real from_long(long v, mpfr_prec_t prec = kMinBits) {
    Real r(std::max(prec, kMinBits));
    mpfr_set_si(r.mid_.get(), v, MPFR_RNDN);
    return r;
  }

  // Exact: precision is widened to hold every bit of v.
  static Real from_integer(const Integer& v, mpfr_prec_t prec = kMinBits) {
    mpfr_prec_t need = static_cast<mpfr_prec_t>(mpz_sizeinbase(v.get_mpz_t(), 2)) + 1;
    Real r(std::max({prec, need, kMinBits}));
    mpfr_set_z(r.mid_.get(), v.get_mpz_t(), MPFR_RNDN);
    return r;
  }

  static Real from_rational(const Rational& v, mpfr_prec_t prec) {
    Real r(std::max(prec, kMinBits));
    int t = mpfr_set_q(r.mid_.get(), v.get_mpq_t(), MPFR_RNDN);
    r.add_rounding(t);
    return r;
  }

  static Real from_double(double v, mpfr_prec_t prec = kMinBits) {
    Real r(std::max(prec, kMinBits));
    mpfr_set_d(r.mid_.get(), v, MPFR_RNDN);
    return r;
  }

  // Ball with an explicit midpoint and radius (radius is rounded up).
  static Real from_mid_rad(mpfr_srcptr mid, mpfr_srcptr rad) {
    Real r(std::max(mpfr_get_prec(mid), kMinBits));
    mpfr_set(r.mid_.get(), mid, MPFR_RNDN);
    mpfr_set(r.rad_.get(), rad, MPFR_RNDU);
    return r;
  }

  static Real pi(mpfr_prec_t prec) {
    Real r(std::max(prec, kMinBits));
    r.add_rounding(mpfr_const_pi(r.mid_.get(), MPFR_RNDN));
    return r;
  }

  static Real ln2(mpfr_prec_t prec) {
    Real r(std::max(prec, kMinBits));
    r.add_rounding(mpfr_const_log2(r.mid_.get(), MPFR_RNDN));
    return r;
  }

  mpfr_prec_t precision() const { return mid_.precision(); }
  mpfr_srcptr mid() const { return mid_.get(); }
  mpfr_srcptr rad() const { return rad_.get(); }
  bool is_exact() const { return mpfr_zero_p(rad_.get()) != 0; }
  double to_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }
  double radius_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

  // Exact value of the midpoint.
  Rational mid_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), mid_.get());
    return q;
  }

  Float lower() const {
    Float f(precision());
    mpfr_sub(f.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return f;
  }

  Float upper() const {
    Float f(precision());
    mpfr_add(f.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return f;
  }

  // +1 or -1 when every point of the ball has that sign, 0 for an exact zero,
  // nullopt when the ball straddles zero.
  std::optional<int> sign() const {
    if (is_exact()) return mpfr_sgn(mid_.get()) > 0 ? 1 : (mpfr_sgn(mid_.get()) < 0 ? -1 : 0);
    if (mpfr_sgn(lower().get()) > 0) return 1;
    if (mpfr_sgn(upper().get()) < 0) return -1;
    return std::nullopt;
  }

  bool contains(const Rational& q) const {
    return mpfr_cmp_q(lower().get(), q.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(upper().get(), q.get_mpq_t()) >= 0;
  }

  bool contains_zero() const { return !sign().has_value() || *sign() == 0; }

  // True when this ball lies inside other.
  bool subset_of(const Real& other) const {
    return mpfr_cmp(lower().get(), other.lower().get()) >= 0 &&
           mpfr_cmp(upper().get(), other.upper().get()) <= 0;
  }

  // Widen the radius by e (rounded up).
  Real& inflate(mpfr_srcptr e) {
    Float a(kRadiusBits);
    mpfr_abs(a.get(), e, MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), a.get(), MPFR_RNDU);
    return *this;
  }

  Real& inflate(const Real& e) {
    Float b = e.abs_upper();
    return inflate(b.get());
  }

  // Upper bound on |x| over the whole ball, as a short float.
  Float abs_upper() const {
    Float a(kRadiusBits);
    mpfr_abs(a.get(), mid_.get(), MPFR_RNDU);
    mpfr_add(a.get(), a.get(), rad_.get(), MPFR_RNDU);
    return a;
  }

  // Lower bound on |x| over the ball (zero if the ball contains zero).
  Float abs_lower() const {
    Float a(kRadiusBits);
    mpfr_abs(a.get(), mid_.get(), MPFR_RNDD);
    mpfr_sub(a.get(), a.get(), rad_.get(), MPFR_RNDD);
    if (mpfr_sgn(a.get()) < 0) mpfr_set_zero(a.get(), 1);
    return a;
  }

  // Low-level access for the arithmetic kernels.
  mpfr_ptr mid_ptr() { return mid_.get(); }
  mpfr_ptr rad_ptr() { return rad_.get(); }

  // Adds one unit in the last place of the midpoint when ternary != 0.
  void add_rounding(int ternary) {
    if (ternary == 0 || mpfr_zero_p(mid_.get()) || !mpfr_number_p(mid_.get())) return;
    Float ulp(kRadiusBits);
    mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(mid_.get()) - precision(), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), ulp.get(), MPFR_RNDU);
  }

  explicit Real(mpfr_prec_t prec) : mid_(std::max(prec, kMinBits)), rad_(kRadiusBits) {}

 private:
  Float mid_;
  Float rad_;
};

namespace detail {

inline mpfr_prec_t result_bits(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

// Upper bound of |mid| as a short float.
inline Float mid_abs_up(const Real& a) {
  Float f(Real::kRadiusBits);
  mpfr_abs(f.get(), a.mid(), MPFR_RNDU);
  return f;
}

inline Float mid_abs_down(const Real& a) {
  Float f(Real::kRadiusBits);
  mpfr_abs(f.get(), a.mid(), MPFR_RNDD);
  return f;
}

}  // namespace detail

inline Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.mid_ptr(), a.mid(), MPFR_RNDN);
  mpfr_set(r.rad_ptr(), a.rad(), MPFR_RNDU);
  return r;
}

inline Real operator+(const Real& a, const Real& b) {
  Real r(detail::result_bits(a, b));
  int t = mpfr_add(r.mid_ptr(), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_add(r.rad_ptr(), a.rad(), b.rad(), MPFR_RNDU);
  r.add_rounding(t);
  return r;
}

inline Real operator-(const Real& a, const Real& b) {
  Real r(detail::result_bits(a, b));
  int t = mpfr_sub(r.mid_ptr(), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_add(r.rad_ptr(), a.rad(), b.rad(), MPFR_RNDU);
  r.add_rounding(t);
  return r;
}

inline Real operator*(const Real& a, const Real& b) {
  Real r(detail::result_bits(a, b));
  int t = mpfr_mul(r.mid_ptr(), a.mid(), b.mid(), MPFR_RNDN);
  // |a| rb + |b| ra + ra rb
  Float ma = detail::mid_abs_up(a), mb = detail::mid_abs_up(b);
  Float x(Real::kRadiusBits), y(Real::kRadiusBits);
  mpfr_mul(x.get(), ma.get(), b.rad(), MPFR_RNDU);
  mpfr_mul(y.get(), mb.get(), a.rad(), MPFR_RNDU);
  mpfr_add(x.get(), x.get(), y.get(), MPFR_RNDU);
  mpfr_mul(y.get(), a.rad(), b.rad(), MPFR_RNDU);
  mpfr_add(r.rad_ptr(), x.get(), y.get(), MPFR_RNDU);
  r.add_rounding(t);
  return r;
}

inline Real operator/(const Real& a, const Real& b) {
  Float blow = b.abs_lower();
  if (mpfr_zero_p(blow.get())) throw DomainError("division by a ball that contains zero");
  Real r(detail::result_bits(a, b));
  int t = mpfr_div(r.mid_ptr(), a.mid(), b.mid(), MPFR_RNDN);
  if (!a.is_exact() || !b.is_exact()) {
    // (|a| rb + |b| ra) / (|b| (|b| - rb))
    Float ma = detail::mid_abs_up(a), mb = detail::mid_abs_up(b);
    Float num(Real::kRadiusBits), y(Real::kRadiusBits);
    mpfr_mul(num.get(), ma.get(), b.rad(), MPFR_RNDU);
    mpfr_mul(y.get(), mb.get(), a.rad(), MPFR_RNDU);
    mpfr_add(num.get(), num.get(), y.get(), MPFR_RNDU);
    Float den = detail::mid_abs_down(b);
    mpfr_mul(den.get(), den.get(), blow.get(), MPFR_RNDD);
    mpfr_div(r.rad_ptr(), num.get(), den.get(), MPFR_RNDU);
  }
  r.add_rounding(t);
  return r;
}

inline Real& operator+=(Real& a, const Real& b) { return a = a + b; }
inline Real& operator-=(Real& a, const Real& b) { return a = a - b; }
inline Real& operator*=(Real& a, const Real& b) { return a = a * b; }
inline Real& operator/=(Real& a, const Real& b) { return a = a / b; }

// Multiplication and division by exact integers keep the code readable.
inline Real operator*(const Real& a, long k) { return a * Real::from_long(k); }
inline Real operator*(long k, const Real& a) { return a * Real::from_long(k); }
inline Real operator/(const Real& a, long k) { return a / Real::from_long(k); }
inline Real operator+(const Real& a, long k) { return a + Real::from_long(k); }
inline Real operator-(const Real& a, long k) { return a - Real::from_long(k); }
inline Real operator-(long k, const Real& a) { return Real::from_long(k) - a; }

inline Real abs(const Real& a) {
  if (mpfr_sgn(a.mid()) < 0) return -a;
  return a;
}

inline Real exp(const Real& a) {
  Real r(a.precision());
  int t = mpfr_exp(r.mid_ptr(), a.mid(), MPFR_RNDN);
  if (!a.is_exact()) {
    // exp(m + d) - exp(m) <= exp(m) * expm1(r)
    Float e(Real::kRadiusBits), g(Real::kRadiusBits);
    mpfr_exp(e.get(), a.mid(), MPFR_RNDU);
    mpfr_expm1(g.get(), a.rad(), MPFR_RNDU);
    mpfr_mul(r.rad_ptr(), e.get(), g.get(), MPFR_RNDU);
  }
  r.add_rounding(t);
  return r;
}

inline Real expm1(const Real& a) {
  Real r(a.precision());
  int t = mpfr_expm1(r.mid_ptr(), a.mid(), MPFR_RNDN);
  if (!a.is_exact()) {
    Float e(Real::kRadiusBits), g(Real::kRadiusBits);
    mpfr_exp(e.get(), a.mid(), MPFR_RNDU);
    mpfr_expm1(g.get(), a.rad(), MPFR_RNDU);
    mpfr_mul(r.rad_ptr(), e.get(), g.get(), MPFR_RNDU);
  }
  r.add_rounding(t);
  return r;
}

namespace detail {

// Sets rad to -log1p(-rad / base_low), the Lipschitz bound for log near base.
inline void log_radius(Real& r, mpfr_srcptr rad, const Float& base_low) {
  if (mpfr_sgn(base_low.get()) <= 0) throw DomainError("logarithm of a ball that reaches zero");
  Float q(Real::kRadiusBits);
  mpfr_div(q.get(), rad, base_low.get(), MPFR_RNDU);
  if (mpfr_cmp_ui(q.get(), 1) >= 0) throw DomainError("logarithm of a ball that reaches zero");
  mpfr_neg(q.get(), q.get(), MPFR_RNDN);
  mpfr_log1p(q.get(), q.get(), MPFR_RNDD);
  mpfr_neg(r.rad_ptr(), q.get(), MPFR_RNDU);
}

}  // namespace detail

inline Real log(const Real& a) {
  Float lo = a.lower();
  if (mpfr_sgn(lo.get()) <= 0) throw DomainError("logarithm of a non-positive ball");
  Real r(a.precision());
  int t = mpfr_log(r.mid_ptr(), a.mid(), MPFR_RNDN);
  if (!a.is_exact()) {
    Float base(Real::kRadiusBits);
    mpfr_set(base.get(), a.mid(), MPFR_RNDD);
    detail::log_radius(r, a.rad(), base);
  }
  r.add_rounding(t);
  return r;
}

inline Real log1p(const Real& a) {
  Float lo = a.lower();
  if (mpfr_cmp_si(lo.get(), -1) <= 0) throw DomainError("log1p of a ball reaching -1");
  Real r(a.precision());
  int t = mpfr_log1p(r.mid_ptr(), a.mid(), MPFR_RNDN);
  if (!a.is_exact()) {
    Float base(Real::kRadiusBits);
    mpfr_add_ui(base.get(), a.mid(), 1, MPFR_RNDD);
    detail::log_radius(r, a.rad(), base);
  }
  r.add_rounding(t);
  return r;
}

inline Real sin(const Real& a) {
  Real r(a.precision());
  int t = mpfr_sin(r.mid_ptr(), a.mid(), MPFR_RNDN);
  mpfr_set(r.rad_ptr(), a.rad(), MPFR_RNDU);
  r.add_rounding(t);
  return r;
}

inline Real cos(const Real& a) {
  Real r(a.precision());
  int t = mpfr_cos(r.mid_ptr(), a.mid(), MPFR_RNDN);
  mpfr_set(r.rad_ptr(), a.rad(), MPFR_RNDU);
  r.add_rounding(t);
  return r;
}

// Hyperbolic functions are only used on exact arguments (quadrature nodes),
// but the radius rule is kept general: |f'| <= cosh(|m| + r).
inline Real sinh(const Real& a) {
  Real r(a.precision());
  int t = mpfr_sinh(r.mid_ptr(), a.mid(), MPFR_RNDN);
  if (!a.is_exact()) {
    Float s = a.abs_upper();
    mpfr_cosh(s.get(), s.get(), MPFR_RNDU);
    mpfr_mul(r.rad_ptr(), s.get(), a.rad(), MPFR_RNDU);
  }
  r.add_rounding(t);
  return r;
}

inline Real cosh(const Real& a) {
  Real r(a.precision());
  int t = mpfr_cosh(r.mid_ptr(), a.mid(), MPFR_RNDN);
  if (!a.is_exact()) {
    Float s = a.abs_upper();
    mpfr_cosh(s.get(), s.get(), MPFR_RNDU);
    mpfr_mul(r.rad_ptr(), s.get(), a.rad(), MPFR_RNDU);
  }
  r.add_rounding(t);
  return r;
}

inline Real sqrt(const Real& a) {
  Float lo = a.lower();
  if (mpfr_sgn(lo.get()) < 0) throw DomainError("square root of a negative ball");
  Real r(a.precision());
  int t = mpfr_sqrt(r.mid_ptr(), a.mid(), MPFR_RNDN);
  if (!a.is_exact()) {
    // |sqrt(m + d) - sqrt(m)| <= min(r / sqrt(m), sqrt(r))
    Float s(Real::kRadiusBits), q(Real::kRadiusBits);
    mpfr_sqrt(s.get(), a.rad(), MPFR_RNDU);
    Float m = detail::mid_abs_down(a);
    mpfr_sqrt(m.get(), m.get(), MPFR_RNDD);
    if (mpfr_sgn(m.get()) > 0) {
      mpfr_div(q.get(), a.rad(), m.get(), MPFR_RNDU);
      if (mpfr_cmp(q.get(), s.get()) < 0) mpfr_set(s.get(), q.get(), MPFR_RNDU);
    }
    mpfr_set(r.rad_ptr(), s.get(), MPFR_RNDU);
  }
  r.add_rounding(t);
  return r;
}

// Principal argument of x + iy in (-pi, pi].
inline Real atan2(const Real& y, const Real& x) {
  Float ylow = y.abs_lower(), xlow = x.abs_lower();
  bool y_has_zero = mpfr_zero_p(ylow.get()) != 0;
  if (y_has_zero && mpfr_sgn(x.lower().get()) <= 0) {
    if (y.is_exact() && mpfr_zero_p(y.mid()) && mpfr_sgn(x.upper().get()) < 0) {
      return Real::pi(detail::result_bits(x, y));
    }
    throw BranchError("argument of a ball that touches the negative real axis or zero");
  }
  Real r(detail::result_bits(x, y));
  int t = mpfr_atan2(r.mid_ptr(), y.mid(), x.mid(), MPFR_RNDN);
  if (!x.is_exact() || !y.is_exact()) {
    Float d(Real::kRadiusBits), e(Real::kRadiusBits);
    mpfr_sqr(d.get(), xlow.get(), MPFR_RNDD);
    mpfr_sqr(e.get(), ylow.get(), MPFR_RNDD);
    mpfr_add(d.get(), d.get(), e.get(), MPFR_RNDD);
    mpfr_sqrt(d.get(), d.get(), MPFR_RNDD);
    mpfr_add(e.get(), x.rad(), y.rad(), MPFR_RNDU);
    mpfr_div(r.rad_ptr(), e.get(), d.get(), MPFR_RNDU);
  }
  r.add_rounding(t);
  return r;
}

inline Real pow(const Real& base, const Real& e) { return exp(e * log(base)); }

inline Real square(const Real& a) { return a * a; }

inline Real num(const Rational& q, mpfr_prec_t bits) { return Real::from_rational(q, bits); }

// Ordering of a ball against an exact threshold. `unordered` means the ball
// straddles t and more precision is needed; `equivalent` only comes from an
// exact ball.
inline std::partial_ordering compare_threshold(const Real& x, const Rational& t) {
  if (x.is_exact()) {
    int c = mpfr_cmp_q(x.mid(), t.get_mpq_t());
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  if (mpfr_cmp_q(x.lower().get(), t.get_mpq_t()) > 0) return std::partial_ordering::greater;
  if (mpfr_cmp_q(x.upper().get(), t.get_mpq_t()) < 0) return std::partial_ordering::less;
  return std::partial_ordering::unordered;
}

}  // namespace shinlab
