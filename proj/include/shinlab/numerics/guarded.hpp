#pragma once

#include <string>
#include <type_traits>

#include "shinlab/numerics/decimal.hpp"
#include "shinlab/numerics/precision.hpp"
#include "shinlab/numerics/real.hpp"

namespace shinlab {

// rad <= 10^(2 - digits) * |mid|, or rad <= 10^(2 - digits) for a zero midpoint.
inline bool meets_precision(const Real& x, const Precision& p) {
  if (x.is_exact()) return true;
  Float tol(Real::kRadiusBits), ten(Real::kRadiusBits);
  mpfr_set_ui(ten.get(), 10, MPFR_RNDN);
  mpfr_pow_si(tol.get(), ten.get(), p.tolerance_exponent(), MPFR_RNDD);
  if (!mpfr_zero_p(x.mid())) {
    Float m(Real::kRadiusBits);
    mpfr_abs(m.get(), x.mid(), MPFR_RNDD);
    mpfr_mul(tol.get(), tol.get(), m.get(), MPFR_RNDD);
  }
  return mpfr_cmp(x.rad(), tol.get()) <= 0;
}

// Runs f(bits) with growing guard bits until the ball meets the requested
// relative tolerance.
template <class F>
Real evaluate(const Precision& p, F&& f, int max_rounds = 8) {
  mpfr_prec_t extra = 16;
  for (int round = 0; round < max_rounds; ++round, extra *= 2) {
    Real r = f(p.bits() + extra);
    if (meets_precision(r, p)) return r;
  }
  throw PrecisionExhausted("could not reach " + std::to_string(p.digits()) + " digits");
}

// Escalates digits (doubling) until the comparison with t is decided.
// Returns `unordered` only when the cap is hit.
template <class F>
std::partial_ordering certified_compare(F&& f, const Rational& t, const Precision& p,
                                        int cap_factor = 16) {
  for (int d = p.digits(); d <= p.digits() * cap_factor; d *= 2) {
    std::partial_ordering c = compare_threshold(f(bits_for_digits(d)), t);
    if (c != std::partial_ordering::unordered) return c;
  }
  return std::partial_ordering::unordered;
}

namespace detail {

inline Integer floor_of(mpfr_srcptr v) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v, MPFR_RNDD);
  return z;
}

inline Integer ceil_of(mpfr_srcptr v) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v, MPFR_RNDU);
  return z;
}

enum class Direction { Floor, Ceil };

template <class F>
Integer guarded_round(F&& f, const Precision& p, int cap_factor, Direction dir) {
  using Result = std::invoke_result_t<F&, Precision>;
  for (int d = p.digits(); d <= p.digits() * cap_factor; d *= 2) {
    Result v = f(Precision(d));
    if constexpr (std::is_same_v<Result, Rational>) {
      Integer z;
      if (dir == Direction::Ceil) {
        mpz_cdiv_q(z.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
      } else {
        mpz_fdiv_q(z.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
      }
      return z;
    } else {
      if (v.is_exact()) return dir == Direction::Ceil ? ceil_of(v.mid()) : floor_of(v.mid());
      Float lo = v.lower(), hi = v.upper();
      // The ball is decisive when it holds no integer.
      Integer cl = ceil_of(lo.get());
      if (mpfr_cmp_z(hi.get(), cl.get_mpz_t()) < 0) {
        return dir == Direction::Ceil ? cl : Integer(cl - 1);
      }
    }
  }
  throw TieUnresolved("value could not be separated from an integer within " +
                      std::to_string(p.digits() * cap_factor) + " digits");
}

}  // namespace detail

// Ceiling of a value produced by f(Precision). f may return a Real ball or an
// exact Rational; balls are refined by doubling digits up to cap_factor.
template <class F>
Integer guarded_ceil(F&& f, const Precision& p, int cap_factor = 16) {
  return detail::guarded_round(std::forward<F>(f), p, cap_factor, detail::Direction::Ceil);
}

template <class F>
Integer guarded_floor(F&& f, const Precision& p, int cap_factor = 16) {
  return detail::guarded_round(std::forward<F>(f), p, cap_factor, detail::Direction::Floor);
}

}  // namespace shinlab
