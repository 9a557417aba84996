#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>

#include "shinlab/numerics/errors.hpp"

namespace shinlab {

// Requested number of correct significant decimal digits.
class Precision {
 public:
  static constexpr int kMinDigits = 10;
  static constexpr int kDefaultDigits = 50;
  static constexpr mpfr_prec_t kGuardBits = 24;

  Precision() = default;
  explicit Precision(int digits) : digits_(digits) {
    if (digits < kMinDigits) {
      throw DomainError("precision must be at least " + std::to_string(kMinDigits) +
                        " digits, got " + std::to_string(digits));
    }
  }

  int digits() const { return digits_; }

  // Working bits: enough for the requested digits plus guard bits.
  mpfr_prec_t bits() const {
    return static_cast<mpfr_prec_t>(std::ceil(digits_ * 3.321928094887362)) + kGuardBits;
  }

  // Relative tolerance is 10^tolerance_exponent().
  int tolerance_exponent() const { return 2 - digits_; }

  Precision scaled(int factor) const { return Precision(digits_ * factor); }

  friend bool operator==(const Precision&, const Precision&) = default;

 private:
  int digits_ = kDefaultDigits;
};

inline mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + Precision::kGuardBits;
}

}  // namespace shinlab
