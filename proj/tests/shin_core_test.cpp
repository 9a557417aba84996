#include <gtest/gtest.h>

#include <array>
#include <random>
#include <string>

#include "shinlab/shin_core.hpp"

using namespace shinlab;

namespace {

// Values of S(k, 1) for k = 9..19 to 50 significant digits.
const std::array<const char*, 11> kTable = {
    "2.0484148121729077984789748528464903812082646338028",
    "2.0379259208387064562838079920238964441117176933744",
    "2.0294161672236677191636908626945714916029532064944",
    "2.0223737073469397533461445484297949184415534016560",
    "2.0164491799135882361365114303236301480590762568587",
    "2.0113959747189663594458436566806886371655211482846",
    "2.0070350457364044054984268130457357906298862812402",
    "2.0032332566108411453651981972386971733090123101528",
    "1.9998895526624551656968593976078763119133058370586",
    "1.9969258468076576081148471529242828805292201418873",
    "1.9942808454379732420411582337304540085201659981375",
};

// |v - table| <= 10^-49: the table digits are truncated, not rounded.
::testing::AssertionResult matches_table(const Real& v, const char* row) {
  Real diff = abs(v - parse_real(row, 300));
  if (compare_threshold(diff, Rational(1, Integer("10000000000000000000000000000000000000000000000000"))) ==
      std::partial_ordering::less) {
    return ::testing::AssertionSuccess();
  }
  return ::testing::AssertionFailure() << to_decimal(v, 55) << " vs " << row;
}

bool above_two(const Real& v) { return compare_threshold(v, Rational(2)) == std::partial_ordering::greater; }
bool below_two(const Real& v) { return compare_threshold(v, Rational(2)) == std::partial_ordering::less; }

}  // namespace

TEST(Omega, FormulaValues) {
  EXPECT_EQ(omega(1), 0);
  EXPECT_EQ(omega(8), 0);
  EXPECT_EQ(omega(9), 1);
  EXPECT_EQ(omega(26), 3);
  EXPECT_EQ(omega(104), 11);
  EXPECT_EQ(omega(105), 12);
}

TEST(Omega, OracleValues) {
  EXPECT_EQ(omega_oracle(Rational(9)), 1);
  EXPECT_EQ(omega_oracle(Rational(17)), 2);
  EXPECT_EQ(omega_oracle(Rational(16)), 1);
  EXPECT_EQ(omega_oracle(Rational(1)), 0);
}

TEST(Omega, OracleMatchesFormulaUpTo500) {
  for (long k = 1; k <= 500; ++k) ASSERT_EQ(omega(k), omega_oracle(Rational(k))) << "k = " << k;
}

TEST(Omega, OracleHintDoesNotChangeTheResult) {
  for (long k : {1L, 9L, 100L, 777L, 5000L}) {
    Integer plain = omega_oracle(Rational(k));
    for (long hint : {0L, 3L, 90L, 1000L, 100000L}) EXPECT_EQ(omega_oracle(Rational(k), hint), plain);
  }
}

TEST(Omega, RealArgumentsAndRightContinuity) {
  // omega is a step function in real x; its jumps sit between the integer intervals.
  EXPECT_EQ(omega(Rational(8)), 0);
  EXPECT_EQ(omega(Rational(17, 2)), 1);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> pick(1, 200000);
  for (int i = 0; i < 200; ++i) {
    Rational x(pick(rng), 997);
    x.canonicalize();
    EXPECT_EQ(omega(x), omega_oracle(x)) << x.get_str();
  }
}

TEST(Omega, RejectsNonPositiveArguments) {
  EXPECT_THROW(omega(Rational(0)), DomainError);
  EXPECT_THROW(omega(Rational(-3, 2)), DomainError);
  EXPECT_THROW(omega_oracle(Rational(0)), DomainError);
}

TEST(ShinMember, ExactSmallCases) {
  EXPECT_TRUE(shin_member({Rational(1), 0}).contains(Rational(64, 27)));
  EXPECT_TRUE(shin_member({Rational(1), -1}).contains(Rational(125, 64)));
  EXPECT_TRUE(shin_member({Rational(2), 0}).contains(Rational(16807, 7776)));
}

TEST(ShinMember, TableToFiftyDigits) {
  for (long k = 9; k <= 19; ++k) {
    Real v = shin_member({Rational(k), 1}, Precision(50));
    EXPECT_TRUE(matches_table(v, kTable[static_cast<std::size_t>(k - 9)])) << "k = " << k;
  }
}

TEST(ShinMember, PoleIsADomainError) {
  EXPECT_THROW(shin_member({Rational(1), 3}), DomainError);
  EXPECT_THROW(shin_member({Rational(1), 4}), DomainError);
  EXPECT_THROW(shin_member({Rational(1, 3), 1}), DomainError);
}

TEST(ShinMember, MeetsRequestedPrecision) {
  for (int d : {10, 30, 80, 200}) {
    Precision p(d);
    EXPECT_TRUE(meets_precision(shin_member({Rational(12345, 7), 3}, p), p)) << d;
  }
}

TEST(Shin, SelectedValues) {
  ShinSample s9 = shin(9);
  EXPECT_EQ(s9.omega, 1);
  EXPECT_TRUE(matches_table(s9.value, kTable[0]));
  ShinSample s1 = shin(1);
  EXPECT_EQ(s1.omega, 0);
  ASSERT_TRUE(s1.exact.has_value());
  EXPECT_EQ(*s1.exact, Rational(64, 27));
  EXPECT_TRUE(s1.value.contains(*s1.exact));
}

TEST(Shin, MillionIsJustAboveTwo) {
  ShinSample s = shin(1000000);
  EXPECT_EQ(s.omega, 114609);
  EXPECT_TRUE(above_two(s.value));
  EXPECT_EQ(compare_threshold(s.value, Rational(200001, 100000)), std::partial_ordering::less);
  // 0 < S - 2 <= 2 ((2k+1)/(3k - omega) - log 2)
  Real gap = s.value - 2;
  Real bound = (Real::from_long(2000001, 200) / Real::from_long(3000000 - 114609, 200) - Real::ln2(200)) * 2;
  EXPECT_EQ(bound.sign(), 1);
  EXPECT_EQ((bound - gap).sign(), 1);
}

TEST(ShinExact, Values) {
  EXPECT_EQ(shin_exact(1), Rational(64, 27));
  EXPECT_EQ(shin_exact(2), Rational(16807, 7776));
  Rational r9 = shin_exact(9);
  Integer a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), 27, 19);
  mpz_ui_pow_ui(b.get_mpz_t(), 26, 19);
  EXPECT_EQ(r9, Rational(a, b));
  EXPECT_TRUE(matches_table(Real::from_rational(r9, 300), kTable[0]));
  EXPECT_THROW(shin_exact(0), DomainError);
  EXPECT_THROW(shin_exact(2001), DomainError);
  EXPECT_NO_THROW(shin_exact(2500, 3000));
}

TEST(ShinExact, InsideTheBallUpTo200) {
  for (long k = 1; k <= 200; ++k) {
    Real v = shin_member({Rational(k), omega(k)});
    ASSERT_TRUE(v.contains(shin_exact(k))) << "k = " << k;
  }
}

TEST(ShinSeq, MatchesShin) {
  EXPECT_TRUE(shin_seq(1).contains(Rational(64, 27)));
  // At n = 17 the sequence form selects omega = 2, giving (50/49)^35; the m = 1
  // table row at k = 17 lies below 2 and is not a value of the sequence.
  Integer a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), 50, 35);
  mpz_ui_pow_ui(b.get_mpz_t(), 49, 35);
  EXPECT_TRUE(shin_seq(17).contains(Rational(a, b)));
  EXPECT_FALSE(matches_table(shin_seq(17), kTable[8]));
  for (long n = 1; n <= 300; ++n) {
    Real diff = shin_seq(n) - shin(n).value;
    ASSERT_TRUE(diff.contains(Rational(0))) << "n = " << n;
  }
  EXPECT_THROW(shin_seq(0), DomainError);
}

TEST(Derivatives, SignsAtSamplePoints) {
  DerivativeBundle d = derivatives({Rational(5), 0});
  EXPECT_EQ(d.d1.sign(), -1);
  EXPECT_EQ(d.d2log.sign(), 1);
}

TEST(Derivatives, FirstDerivativeMatchesCentralDifference) {
  Precision p(40);
  Rational h(1, 100000000);
  Real plus = shin_member({Rational(7) + h, 1}, p), minus = shin_member({Rational(7) - h, 1}, p);
  Real fd = (plus - minus) / num(2 * h, p.bits());
  Real d1 = derivatives({Rational(7), 1}, p).d1;
  Real rel = abs((fd - d1) / d1);
  EXPECT_LT(rel.to_double(), 1e-6);
}

TEST(Derivatives, SecondLogDerivativeMatchesFiniteDifference) {
  Precision p(60);
  Rational x(23, 3), h(1, 10000);
  auto logs = [&](const Rational& t) { return log(shin_member({t, 2}, p)); };
  Real fd = (logs(x + h) - logs(x) * 2 + logs(x - h)) / num(h * h, p.bits());
  Real d2 = derivatives({x, 2}, p).d2log;
  EXPECT_LT(abs((fd - d2) / d2).to_double(), 1e-6);
}

TEST(Derivatives, SignsOnRandomPointsOfEachInterval) {
  const long k_min[] = {1, 9, 17, 26, 35, 44, 52, 61, 70, 79, 87, 96};
  const long k_max[] = {8, 16, 25, 34, 43, 51, 60, 69, 78, 86, 95, 104};
  std::mt19937_64 rng(2024);
  for (int ell = 0; ell < 12; ++ell) {
    std::uniform_int_distribution<long> pick(k_min[ell] * 1000, k_max[ell] * 1000);
    for (int i = 0; i < 100; ++i) {
      Rational x(pick(rng), 1000);
      x.canonicalize();
      DerivativeBundle d = derivatives({x, ell}, Precision(20));
      ASSERT_EQ(d.d1.sign(), -1) << x.get_str();
      ASSERT_EQ(d.d2log.sign(), 1) << x.get_str();
    }
  }
}

TEST(Family, StrictlyIncreasingInM) {
  for (long k : {3L, 20L, 150L}) {
    for (long m = 0; m < 3 * k - 1; m += 1 + k / 10) {
      Real lo = shin_member({Rational(k), m}, Precision(20)), hi = shin_member({Rational(k), m + 1}, Precision(20));
      ASSERT_EQ((hi - lo).sign(), 1);
    }
  }
}

TEST(Family, ThresholdsOfFirstThreeMembers) {
  // Member m stays above 2 up to the last integer of I_(m+1), then stays below.
  const long last[] = {8, 16, 25};
  for (long m = 0; m <= 2; ++m) {
    int changes = 0;
    bool prev = true;
    for (long k = 1; k <= 200; ++k) {
      Real v = shin_member({Rational(k), m}, Precision(30));
      bool above = above_two(v);
      EXPECT_EQ(above, k <= last[m]) << "m = " << m << " k = " << k;
      if (!above) {
        EXPECT_TRUE(below_two(v));
      }
      if (k > 1 && above != prev) ++changes;
      prev = above;
    }
    EXPECT_EQ(changes, 1);
  }
}

TEST(Family, HorizontalAsymptote) {
  Real e23 = exp(Real::from_rational(Rational(2, 3), 200));
  for (long m = 0; m <= 2; ++m) {
    Real d = abs(shin_member({Rational(1000000000L), m}) - e23);
    EXPECT_LE(d.to_double(), 1e-8) << m;
  }
}

TEST(Fundamental, HoldsUpTo2000) {
  for (long k = 1; k <= 2000; ++k) {
    FundamentalCheck c = check_fundamental(Rational(k), Precision(30));
    ASSERT_TRUE(c.holds) << "k = " << k;
    ASSERT_TRUE(above_two(c.selected));
    if (c.omega >= 1) {
      ASSERT_TRUE(below_two(*c.previous));
    }
  }
}
