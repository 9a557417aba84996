#pragma once

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>

#include "shinlab/numerics/real.hpp"

namespace shinlab {

// Parses "123", "-1.5e-3", "1e12" or "7/3" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return DomainError("malformed number: '" + std::string(text) + "'"); };
  std::string s(text);
  if (s.empty()) throw fail();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational p = parse_rational(s.substr(0, slash));
    Rational q = parse_rational(s.substr(slash + 1));
    if (q == 0) throw DomainError("zero denominator in '" + s + "'");
    Rational r = p / q;
    r.canonicalize();
    return r;
  }
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  std::string digits;
  long frac_len = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw fail();
  long exp10 = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw fail();
    ++i;
    std::size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) throw fail();
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw fail();
    }
    if (s.size() - i > 9) throw DomainError("exponent out of range in '" + s + "'");
    exp10 = std::strtol(s.c_str() + start, nullptr, 10);
  }
  Integer mant(digits, 10);
  long shift = exp10 - frac_len;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational r = shift >= 0 ? Rational(mant * scale) : Rational(mant, scale);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

inline Real parse_real(std::string_view text, mpfr_prec_t bits) {
  return Real::from_rational(parse_rational(text), bits);
}

namespace detail {

// Renders 0.D x 10^e, with D a string of significant digits.
inline std::string place_point(bool neg, std::string d, long e) {
  std::string out = neg ? "-" : "";
  long n = static_cast<long>(d.size());
  if (e > -6 && e <= 21) {
    if (e <= 0) {
      out += "0." + std::string(static_cast<std::size_t>(-e), '0') + d;
    } else if (e >= n) {
      out += d + std::string(static_cast<std::size_t>(e - n), '0');
    } else {
      out += d.substr(0, static_cast<std::size_t>(e)) + "." + d.substr(static_cast<std::size_t>(e));
    }
    return out;
  }
  out += d.substr(0, 1);
  if (n > 1) out += "." + d.substr(1);
  long x = e - 1;
  out += (x < 0 ? "e-" : "e+") + std::to_string(x < 0 ? -x : x);
  return out;
}

}  // namespace detail

// Midpoint rounded to `digits` significant digits, ties to even.
inline std::string to_decimal(const Real& x, int digits) {
  if (digits < 1) throw DomainError("digit count must be positive");
  if (mpfr_zero_p(x.mid())) return "0";
  if (!mpfr_number_p(x.mid())) return mpfr_nan_p(x.mid()) ? "nan" : (mpfr_sgn(x.mid()) > 0 ? "inf" : "-inf");
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), x.mid(), MPFR_RNDN);
  std::string s(raw);
  mpfr_free_str(raw);
  bool neg = s[0] == '-';
  if (neg) s.erase(0, 1);
  return detail::place_point(neg, s, static_cast<long>(e));
}

// Exact rational rounded to `digits` significant digits, ties to even.
inline std::string to_decimal(const Rational& q, int digits) {
  if (digits < 1) throw DomainError("digit count must be positive");
  if (q == 0) return "0";
  Rational a = abs(q);
  a.canonicalize();
  // e with 10^(e-1) <= a < 10^e
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  auto pow10 = [](long k) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? Rational(p) : Rational(1, p);
  };
  while (a >= pow10(e)) ++e;
  while (a < pow10(e - 1)) --e;
  Rational scaled = a * pow10(digits - e);
  Integer n = scaled.get_num() / scaled.get_den();
  Rational frac = scaled - Rational(n);
  if (frac > Rational(1, 2) || (frac == Rational(1, 2) && mpz_odd_p(n.get_mpz_t()))) ++n;
  std::string d = n.get_str();
  if (static_cast<int>(d.size()) > digits) {
    d.pop_back();
    ++e;
  }
  return detail::place_point(q < 0, d, e);
}

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

// Plain decimal for radii and error estimates (a few digits are enough).
inline std::string radius_string(const Real& x, int digits = 3) {
  Real r = Real::from_mid_rad(x.rad(), Real::zero(64).rad());
  return to_decimal(r, digits);
}

}  // namespace shinlab
